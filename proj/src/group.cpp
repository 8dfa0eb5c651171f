#include "trussalg/group.hpp"

#include <numeric>

namespace trussalg {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
  if (orders_.empty())
    throw StructuralError("group literal is empty (non-empty heaps only)");
  long long n = 1;
  for (int m : orders_) {
    if (m < 2) throw StructuralError("cyclic order must be >= 2");
    n *= m;
    if (n > (1LL << 30)) throw CapacityError("group order too large");
  }
  order_ = static_cast<int>(n);
  strides_.assign(orders_.size(), 1);
  for (int i = static_cast<int>(orders_.size()) - 2; i >= 0; --i)
    strides_[i] = strides_[i + 1] * orders_[i + 1];
}

void FiniteAbelianGroup::check_elem(Elem a) const {
  if (a < 0 || a >= order_) throw StructuralError("element index out of range");
}

std::vector<int> FiniteAbelianGroup::to_tuple(Elem a) const {
  check_elem(a);
  std::vector<int> t(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i) {
    t[i] = (a / strides_[i]) % orders_[i];
  }
  return t;
}

Elem FiniteAbelianGroup::from_tuple(const std::vector<int>& t) const {
  if (t.size() != orders_.size()) throw StructuralError("tuple rank mismatch");
  long long a = 0;
  for (size_t i = 0; i < orders_.size(); ++i) {
    int c = t[i] % orders_[i];
    if (c < 0) c += orders_[i];
    a += static_cast<long long>(c) * strides_[i];
  }
  return static_cast<Elem>(a);
}

Elem FiniteAbelianGroup::generator(int i) const { return strides_[i]; }

int FiniteAbelianGroup::component(Elem a, int i) const {
  return (a / strides_[i]) % orders_[i];
}

Elem FiniteAbelianGroup::add(Elem a, Elem b) const {
  check_elem(a);
  check_elem(b);
  Elem r = 0;
  for (size_t i = 0; i < orders_.size(); ++i) {
    int c = (component(a, static_cast<int>(i)) + component(b, static_cast<int>(i))) % orders_[i];
    r += c * strides_[i];
  }
  return r;
}

Elem FiniteAbelianGroup::neg(Elem a) const {
  check_elem(a);
  Elem r = 0;
  for (size_t i = 0; i < orders_.size(); ++i) {
    int c = (orders_[i] - component(a, static_cast<int>(i))) % orders_[i];
    r += c * strides_[i];
  }
  return r;
}

Elem FiniteAbelianGroup::smul(long long k, Elem a) const {
  check_elem(a);
  Elem r = 0;
  for (size_t i = 0; i < orders_.size(); ++i) {
    long long c = (k % orders_[i]) * component(a, static_cast<int>(i)) % orders_[i];
    if (c < 0) c += orders_[i];
    r += static_cast<int>(c) * strides_[i];
  }
  return r;
}

Elem FiniteAbelianGroup::heap(Elem a, Elem b, Elem c) const {
  return add(sub(a, b), c);
}

std::vector<Elem> unrank_args(long long idx, int arity, int order) {
  std::vector<Elem> args(arity);
  for (int i = arity - 1; i >= 0; --i) {
    args[i] = static_cast<Elem>(idx % order);
    idx /= order;
  }
  return args;
}

long long rank_args(const std::vector<Elem>& args, int order) {
  long long idx = 0;
  for (Elem a : args) idx = idx * order + a;
  return idx;
}

long long table_size_guarded(int order, int arity, long long guard) {
  long long n = 1;
  for (int i = 0; i < arity; ++i) {
    n *= order;
    if (n > guard)
      throw CapacityError("table of size |G|^" + std::to_string(arity) +
                          " exceeds enumeration guard");
  }
  return n;
}

std::vector<FnTable> enumerate_heap_endos(const FiniteAbelianGroup& G) {
  if (G.order() > 64) throw CapacityError("heap endo enumeration guarded at |G| <= 64");
  const int r = G.rank();
  const int n = G.order();
  // Images of the generators under the additive part: y_i with n_i * y_i = 0.
  std::vector<std::vector<Elem>> gen_choices(r);
  for (int i = 0; i < r; ++i) {
    int ni = G.cyclic_orders()[i];
    for (Elem y = 0; y < n; ++y)
      if (G.smul(ni, y) == 0) gen_choices[i].push_back(y);
  }
  std::vector<FnTable> out;
  std::vector<size_t> pick(r, 0);
  while (true) {
    for (Elem c = 0; c < n; ++c) {
      FnTable f(n);
      for (Elem x = 0; x < n; ++x) {
        Elem v = c;
        for (int i = 0; i < r; ++i)
          v = G.add(v, G.smul(G.component(x, i), gen_choices[i][pick[i]]));
        f[x] = v;
      }
      out.push_back(std::move(f));
    }
    int i = r - 1;
    while (i >= 0 && ++pick[i] == gen_choices[i].size()) pick[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

namespace {

// One multi-additive component m_S: values on generator tuples of the S-slots.
struct MultiAdditivePart {
  std::vector<int> slots;                 // which arguments (subset S)
  std::vector<std::vector<Elem>> choices; // admissible value per generator tuple
  std::vector<size_t> pick;

  Elem eval(const FiniteAbelianGroup& G, const std::vector<Elem>& args) const {
    const int r = G.rank();
    const int k = static_cast<int>(slots.size());
    Elem acc = 0;
    // sum over generator tuples j in [r]^k of (prod coords) * y_j
    std::vector<int> j(k, 0);
    size_t t = 0;
    while (true) {
      long long coeff = 1;
      for (int s = 0; s < k && coeff != 0; ++s)
        coeff *= G.component(args[slots[s]], j[s]);
      if (coeff != 0) acc = G.add(acc, G.smul(coeff, choices[t][pick[t]]));
      ++t;
      int i = k - 1;
      while (i >= 0 && ++j[i] == r) j[i--] = 0;
      if (i < 0) break;
    }
    return acc;
  }
};

}  // namespace

std::vector<FnTable> enumerate_multi_heap_maps(const FiniteAbelianGroup& G, int arity) {
  if (arity < 0) throw StructuralError("arity must be >= 0");
  const long long tsize = table_size_guarded(G.order(), arity, 4096);
  const int n = G.order();
  const int r = G.rank();

  if (arity == 0) {
    std::vector<FnTable> out;
    for (Elem c = 0; c < n; ++c) out.push_back(FnTable{c});
    return out;
  }

  // Admissible values for a generator tuple (j_1..j_k): y with n_{j_i} * y = 0
  // for every i, equivalently gcd(n_{j_1},..,n_{j_k}) * y = 0.
  auto values_for_gcd = [&](int g) {
    std::vector<Elem> v;
    for (Elem y = 0; y < n; ++y)
      if (G.smul(g, y) == 0) v.push_back(y);
    return v;
  };

  std::vector<MultiAdditivePart> parts;
  for (unsigned mask = 1; mask < (1u << arity); ++mask) {
    MultiAdditivePart p;
    for (int i = 0; i < arity; ++i)
      if (mask & (1u << i)) p.slots.push_back(i);
    const int k = static_cast<int>(p.slots.size());
    long long tuples = 1;
    for (int i = 0; i < k; ++i) tuples *= r;
    std::vector<int> j(k, 0);
    for (long long t = 0; t < tuples; ++t) {
      int g = 0;
      for (int s = 0; s < k; ++s) g = std::gcd(g, G.cyclic_orders()[j[s]]);
      p.choices.push_back(values_for_gcd(g));
      int i = k - 1;
      while (i >= 0 && ++j[i] == r) j[i--] = 0;
    }
    p.pick.assign(p.choices.size(), 0);
    parts.push_back(std::move(p));
  }

  std::vector<FnTable> out;
  // Odometer over the constant and every (subset, generator-tuple) slot.
  while (true) {
    for (Elem c = 0; c < n; ++c) {
      FnTable f(tsize);
      for (long long idx = 0; idx < tsize; ++idx) {
        const std::vector<Elem> args = unrank_args(idx, arity, n);
        Elem v = c;
        for (const auto& p : parts) v = G.add(v, p.eval(G, args));
        f[idx] = v;
      }
      out.push_back(std::move(f));
    }
    // advance the nested odometer across all parts
    size_t pi = 0;
    for (; pi < parts.size(); ++pi) {
      auto& p = parts[pi];
      size_t t = 0;
      for (; t < p.pick.size(); ++t) {
        if (++p.pick[t] < p.choices[t].size()) break;
        p.pick[t] = 0;
      }
      if (t < p.pick.size()) break;
    }
    if (pi == parts.size()) break;
  }
  return out;
}

bool is_multi_heap_map(const FiniteAbelianGroup& G, const FnTable& table, int arity) {
  const int n = G.order();
  long long tsize = 1;
  for (int i = 0; i < arity; ++i) tsize *= n;
  if (static_cast<long long>(table.size()) != tsize) return false;
  if (arity == 0) return table[0] >= 0 && table[0] < n;
  for (int slot = 0; slot < arity; ++slot) {
    for (long long idx = 0; idx < tsize; ++idx) {
      std::vector<Elem> args = unrank_args(idx, arity, n);
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          const Elem a = args[slot];
          std::vector<Elem> ab = args, ac = args, ah = args;
          ab[slot] = b;
          ac[slot] = c;
          ah[slot] = G.heap(a, b, c);
          const Elem lhs = table[rank_args(ah, n)];
          const Elem rhs =
              G.heap(table[idx], table[rank_args(ab, n)], table[rank_args(ac, n)]);
          if (lhs != rhs) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace trussalg
