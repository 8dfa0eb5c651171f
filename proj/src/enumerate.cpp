#include "trussalg/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <thread>

namespace trussalg {

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("NIJ_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < hw) hw = cap;
  }
  return hw;
}

std::vector<FnTable> group_automorphisms(const FiniteAbelianGroup& G) {
  const int n = G.order();
  std::vector<FnTable> out;
  for (const FnTable& f : enumerate_heap_endos(G)) {
    if (f[0] != 0) continue;  // additive part only
    std::vector<bool> hit(n, false);
    bool bij = true;
    for (Elem x = 0; x < n && bij; ++x) {
      if (hit[f[x]]) bij = false;
      hit[f[x]] = true;
    }
    if (bij) out.push_back(f);
  }
  return out;
}

std::vector<FnTable> heap_automorphisms(const FiniteAbelianGroup& G) {
  const int n = G.order();
  std::vector<FnTable> out;
  for (const FnTable& phi : group_automorphisms(G)) {
    for (Elem t = 0; t < n; ++t) {
      FnTable h(n);
      for (Elem x = 0; x < n; ++x) h[x] = G.add(phi[x], t);
      out.push_back(std::move(h));
    }
  }
  return out;
}

namespace {

FnTable invert_table(const FnTable& f) {
  FnTable inv(f.size());
  for (size_t x = 0; x < f.size(); ++x) inv[f[x]] = static_cast<Elem>(x);
  return inv;
}

bool associative(const std::vector<Elem>& mu, int n) {
  auto m = [&](Elem a, Elem b) { return mu[static_cast<size_t>(a) * n + b]; };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = m(a, b);
      for (Elem c = 0; c < n; ++c)
        if (m(ab, c) != m(a, m(b, c))) return false;
    }
  return true;
}

// mu'(x,y) = psi(mu(psi^{-1} x, psi^{-1} y))
std::vector<Elem> transport(const std::vector<Elem>& mu, const FnTable& psi,
                            const FnTable& psi_inv, int n) {
  std::vector<Elem> out(mu.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      out[static_cast<size_t>(x) * n + y] =
          psi[mu[static_cast<size_t>(psi_inv[x]) * n + psi_inv[y]]];
  return out;
}

std::vector<Elem> canonical_form(const std::vector<Elem>& mu,
                                 const std::vector<FnTable>& autos,
                                 const std::vector<FnTable>& autos_inv, int n) {
  std::vector<Elem> best = mu;
  for (size_t i = 0; i < autos.size(); ++i) {
    std::vector<Elem> t = transport(mu, autos[i], autos_inv[i], n);
    if (t < best) best = std::move(t);
  }
  return best;
}

// Partitioned scan: associativity filter plus canonical forms, merged
// deterministically through ordered sets.
void classify(const std::vector<FnTable>& candidates, int n,
              const std::vector<FnTable>& autos, long long& total,
              std::set<std::vector<Elem>>& canon) {
  const int workers = worker_count();
  std::vector<FnTable> autos_inv;
  autos_inv.reserve(autos.size());
  for (const auto& a : autos) autos_inv.push_back(invert_table(a));

  std::vector<long long> totals(workers, 0);
  std::vector<std::set<std::vector<Elem>>> canons(workers);
  auto work = [&](int w) {
    for (size_t i = w; i < candidates.size(); i += workers) {
      if (!associative(candidates[i], n)) continue;
      ++totals[w];
      canons[w].insert(canonical_form(candidates[i], autos, autos_inv, n));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (int w = 0; w < workers; ++w) {
    total += totals[w];
    canon.insert(canons[w].begin(), canons[w].end());
  }
}

}  // namespace

IsoClassReport enumerate_truss_structures(const FiniteAbelianGroup& G) {
  if (G.order() > 4) throw CapacityError("truss structure enumeration guarded at |G| <= 4");
  const int n = G.order();
  // Bi-affine normal form: exactly the maps G^2 -> G that are heap morphisms
  // in both slots.
  const std::vector<FnTable> candidates = enumerate_multi_heap_maps(G, 2);

  IsoClassReport rep;
  std::set<std::vector<Elem>> canon;
  classify(candidates, n, heap_automorphisms(G), rep.total_valid, canon);
  rep.class_count = static_cast<long long>(canon.size());
  rep.representatives.assign(canon.begin(), canon.end());

  // Ring structures: bi-additive survivors (mu(x,0) = mu(0,y) = 0) up to
  // group automorphism.
  std::vector<FnTable> biadd;
  for (const auto& mu : candidates) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      ok = mu[static_cast<size_t>(x) * n] == 0 && mu[x] == 0;
    if (ok) biadd.push_back(mu);
  }
  long long ring_total = 0;
  std::set<std::vector<Elem>> ring_canon;
  classify(biadd, n, group_automorphisms(G), ring_total, ring_canon);
  rep.ring_class_count = static_cast<long long>(ring_canon.size());
  return rep;
}

}  // namespace trussalg
