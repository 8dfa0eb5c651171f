// trussalg command line front end. All reports are canonical JSON (sorted
// keys) on standard output; timing goes to standard error so reruns of the
// same invocation are byte-identical.

#include <chrono>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trussalg/affine.hpp"
#include "trussalg/cohomology.hpp"
#include "trussalg/enumerate.hpp"
#include "trussalg/errors.hpp"
#include "trussalg/io.hpp"
#include "trussalg/nijenhuis.hpp"
#include "trussalg/truss.hpp"

using nlohmann::json;
using namespace trussalg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 2;
constexpr int kExitInputError = 3;
constexpr int kExitCapacity = 4;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int fail_with(const std::string& kind, const std::string& message, int code) {
  emit(json{{"error", kind}, {"message", message}});
  return code;
}

// Integer grid shared by all Z-carrier spot checks.
constexpr long long kGridLo = -5, kGridHi = 5;

struct Args {
  std::string truss_file, map_file, map2_file, input_file, dir = "truss-examples";
  std::vector<int> group_orders;
  int degree = 0, basepoint = 0, size = 3, trials = 64, k = 2, l = 3;
  long long a = 0, b = 0, c = 0, bound = 50;
  std::string lambda1 = "2", lambda2 = "-1/2";
  std::uint64_t seed = 20230404;
};

int run_truss_validate(const Args& a) {
  const json j = load_json_file(a.input_file);
  if (j.contains("mult")) {
    std::vector<int> orders;
    for (const auto& v : j.at("group")) orders.push_back(v.get<int>());
    const FiniteAbelianGroup G(orders);
    std::vector<Elem> mult;
    for (const auto& v : j.at("mult")) mult.push_back(v.get<Elem>());
    if (mult.size() != static_cast<size_t>(G.order()) * G.order())
      throw StructuralError("mult table size does not match group order squared");
    for (Elem x : mult) G.check_elem(x);
    if (const auto violation = FiniteTruss::check_axioms(G, mult)) {
      emit(json{{"valid", false},
                {"violation", violation->kind_name()},
                {"witness", violation->witness}});
      return kExitCheckFailed;
    }
    emit(json{{"valid", true}, {"group", orders}, {"order", G.order()}});
    return kExitPass;
  }
  const ZTrussParams p{j.at("a").get<long long>(), j.at("b").get<long long>(),
                       j.at("c").get<long long>()};
  if (!p.constraint_holds()) {
    emit(json{{"valid", false}, {"violation", "ConstraintViolation"},
              {"detail", "ac != b(b-1)"}});
    return kExitCheckFailed;
  }
  emit(json{{"valid", true}, {"a", p.a}, {"b", p.b}, {"c", p.c}});
  return kExitPass;
}

int run_truss_enumerate(const Args& a) {
  const FiniteAbelianGroup G(a.group_orders);
  const IsoClassReport r = enumerate_truss_structures(G);
  json j = to_json(r);
  j["group"] = a.group_orders;
  emit(j);
  return kExitPass;
}

int run_truss_standard(const Args& a) {
  const FiniteAbelianGroup G(a.group_orders);
  json out = json::array();
  for (const FiniteTruss& T : standard_products(G)) out.push_back(truss_to_json(T));
  emit(json{{"group", a.group_orders}, {"trusses", out}});
  return kExitPass;
}

const FiniteTruss& finite_or_fail(const TrussInput& in) {
  if (!std::holds_alternative<FiniteTruss>(in))
    throw StructuralError("this subcommand needs a finite truss table, not a/b/c parameters");
  return std::get<FiniteTruss>(in);
}

int run_cohomology(const Args& a) {
  const TrussInput in = read_truss_file(a.truss_file);
  const FiniteTruss& T = finite_or_fail(in);
  const CohomologyReport r = cohomology(T, a.basepoint, a.degree);
  emit(to_json(r));
  return kExitPass;
}

int run_nij_check(const Args& a) {
  const TrussInput in = read_truss_file(a.truss_file);
  const MapInput m = read_map_file(a.map_file);
  if (std::holds_alternative<FiniteTruss>(in)) {
    const FiniteTruss& T = std::get<FiniteTruss>(in);
    const FnTable& N = std::get<FnTable>(m);
    const NijenhuisReport r = check_nijenhuis(T, N, a.basepoint);
    emit(to_json(r));
    return (r.is_heap_endo && r.torsion_trivial) ? kExitPass : kExitCheckFailed;
  }
  const ZTrussParams& t = std::get<ZTrussParams>(in);
  const AffineIntMap& N = std::get<AffineIntMap>(m);
  const bool nij = z_is_nijenhuis(t, N);
  const bool assoc = z_product_associative(t, N);
  emit(json{{"p", N.p}, {"q", N.q},
            {"torsion_polynomial", z_torsion_polynomial(t, N)},
            {"torsion_trivial", nij}, {"product_associative", assoc}});
  return nij ? kExitPass : kExitCheckFailed;
}

int run_nij_torsion(const Args& a) {
  const TrussInput in = read_truss_file(a.truss_file);
  const MapInput m = read_map_file(a.map_file);
  if (std::holds_alternative<FiniteTruss>(in)) {
    const FiniteTruss& T = std::get<FiniteTruss>(in);
    const FnTable torsion = torsion_table(T, std::get<FnTable>(m), a.basepoint);
    emit(json{{"basepoint", a.basepoint}, {"torsion", torsion}});
    return kExitPass;
  }
  const ZTrussParams& t = std::get<ZTrussParams>(in);
  const AffineIntMap& N = std::get<AffineIntMap>(m);
  json rows = json::array();
  bool constant = true;
  const long long first = z_torsion(t, N, 0, kGridLo, kGridLo);
  for (long long x = kGridLo; x <= kGridHi; ++x) {
    json row = json::array();
    for (long long y = kGridLo; y <= kGridHi; ++y) {
      const long long v = z_torsion(t, N, 0, x, y);
      constant = constant && v == first;
      row.push_back(v);
    }
    rows.push_back(row);
  }
  json out{{"p", N.p}, {"q", N.q}, {"grid_lo", kGridLo}, {"grid_hi", kGridHi},
           {"torsion", rows}, {"torsion_polynomial", z_torsion_polynomial(t, N)}};
  if (constant) out["constant"] = first;
  emit(out);
  return kExitPass;
}

int run_nij_classify(const Args& a) {
  const ZTrussParams t{a.a, a.b, a.c};
  t.require_constraint();
  const ClassifyZReport r = classify_z(t, a.bound);
  emit(to_json(r));
  return r.agree ? kExitPass : kExitCheckFailed;
}

int run_nij_powers(const Args& a) {
  const TrussInput in = read_truss_file(a.truss_file);
  const MapInput m = read_map_file(a.map_file);
  bool ok;
  if (std::holds_alternative<FiniteTruss>(in))
    ok = power_laws_check(std::get<FiniteTruss>(in), std::get<FnTable>(m), a.k, a.l);
  else
    ok = z_power_laws_check(std::get<ZTrussParams>(in), std::get<AffineIntMap>(m), a.k, a.l);
  emit(json{{"k", a.k}, {"l", a.l}, {"pass", ok}});
  return ok ? kExitPass : kExitCheckFailed;
}

int run_nij_compat(const Args& a) {
  const TrussInput in = read_truss_file(a.truss_file);
  const MapInput m1 = read_map_file(a.map_file);
  const MapInput m2 = read_map_file(a.map2_file);
  bool ok;
  if (std::holds_alternative<FiniteTruss>(in))
    ok = compatible(std::get<FiniteTruss>(in), std::get<FnTable>(m1), std::get<FnTable>(m2));
  else
    ok = z_compatible(std::get<ZTrussParams>(in), std::get<AffineIntMap>(m1),
                      std::get<AffineIntMap>(m2));
  emit(json{{"compatible", ok}});
  return ok ? kExitPass : kExitCheckFailed;
}

int run_affine_verify(const Args& a) {
  AffineVerifyConfig cfg;
  cfg.n = a.size;
  cfg.lambda1 = rat_from_string(a.lambda1);
  cfg.lambda2 = rat_from_string(a.lambda2);
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  const AffineVerifyReport r = affine_verify(cfg);
  json j = to_json(r);
  j["size"] = cfg.n;
  j["lambda1"] = rat_to_string(cfg.lambda1);
  j["lambda2"] = rat_to_string(cfg.lambda2);
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  emit(j);
  return r.all() ? kExitPass : kExitCheckFailed;
}

int run_affine_bracket(const Args& a) {
  const int n = a.size;
  SampleGen gen(a.seed);
  std::vector<BlockMatrix> pts;
  for (int i = 0; i < a.trials; ++i) pts.push_back(gen.coset_point(n));
  AffineVerifyConfig cfg;  // default lambdas; same operator as `affine verify`
  cfg.n = n;
  const AffineOperator N = barycentric_combination(
      {AffineOperator::constant(BlockMatrix::coset_unit(n)),
       AffineOperator::upper_projection_lift(n), AffineOperator::lower_projection_lift(n)},
      {Rational(1) - cfg.lambda1 - cfg.lambda2, cfg.lambda1, cfg.lambda2});
  const bool anti = bracket_antisymmetric(N, pts);
  const bool comm = bracket_equals_product_commutator(N, pts);
  const bool jacobi = bracket_jacobi(N, pts);
  const bool intertwines = linearisation_intertwines(N, pts);
  emit(json{{"size", n}, {"seed", a.seed}, {"samples", a.trials},
            {"bracket_antisymmetric", anti},
            {"bracket_equals_commutator", comm},
            {"bracket_jacobi", jacobi},
            {"linearisation_intertwines", intertwines},
            {"pass", anti && comm && jacobi && intertwines}});
  return (anti && comm && jacobi && intertwines) ? kExitPass : kExitCheckFailed;
}

int run_examples_emit(const Args& a) {
  const std::vector<std::string> files = emit_examples(a.dir);
  emit(json{{"directory", a.dir}, {"files", files}});
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact heap/truss algebra toolkit"};
  app.require_subcommand(1);
  Args args;
  int (*handler)(const Args&) = nullptr;
  auto bind = [&handler](int (*fn)(const Args&)) { return [&handler, fn]() { handler = fn; }; };

  auto* truss = app.add_subcommand("truss", "truss tables");
  truss->require_subcommand(1);
  auto* tv = truss->add_subcommand("validate", "check the truss axioms of an input file");
  tv->add_option("input", args.input_file, "truss JSON file")->required();
  tv->callback(bind(run_truss_validate));
  auto* te = truss->add_subcommand("enumerate", "truss structures on a group up to isomorphism");
  te->add_option("--group", args.group_orders, "cyclic orders, e.g. --group 2 2")->required();
  te->callback(bind(run_truss_enumerate));
  auto* ts = truss->add_subcommand("standard", "the four standard truss products");
  ts->add_option("--group", args.group_orders, "cyclic orders")->required();
  ts->callback(bind(run_truss_standard));

  auto* coh = app.add_subcommand("cohomology", "basepoint-relative cohomology of a finite truss");
  coh->add_option("--truss", args.truss_file)->required();
  coh->add_option("--degree", args.degree)->required();
  coh->add_option("--basepoint", args.basepoint);
  coh->callback(bind(run_cohomology));

  auto* nij = app.add_subcommand("nijenhuis", "deformation operators");
  nij->require_subcommand(1);
  auto* nc = nij->add_subcommand("check", "operator verification");
  nc->add_option("--truss", args.truss_file)->required();
  nc->add_option("--map", args.map_file)->required();
  nc->add_option("--basepoint", args.basepoint);
  nc->callback(bind(run_nij_check));
  auto* nt = nij->add_subcommand("torsion", "torsion table of an operator");
  nt->add_option("--truss", args.truss_file)->required();
  nt->add_option("--map", args.map_file)->required();
  nt->add_option("--basepoint", args.basepoint);
  nt->callback(bind(run_nij_torsion));
  auto* nz = nij->add_subcommand("classify-z", "affine operators on the integer truss");
  nz->add_option("--a", args.a)->required();
  nz->add_option("--b", args.b)->required();
  nz->add_option("--c", args.c)->required();
  nz->add_option("--bound", args.bound);
  nz->callback(bind(run_nij_classify));
  auto* np = nij->add_subcommand("powers", "power and iteration laws");
  np->add_option("--truss", args.truss_file)->required();
  np->add_option("--map", args.map_file)->required();
  np->add_option("--k", args.k);
  np->add_option("--l", args.l);
  np->callback(bind(run_nij_powers));
  auto* ncp = nij->add_subcommand("compat", "compatibility of two operators");
  ncp->add_option("--truss", args.truss_file)->required();
  ncp->add_option("--map", args.map_file)->required();
  ncp->add_option("--map2", args.map2_file)->required();
  ncp->callback(bind(run_nij_compat));

  auto* aff = app.add_subcommand("affine", "block-matrix coset trusses");
  aff->require_subcommand(1);
  auto* av = aff->add_subcommand("verify", "full exact-sample verification suite");
  av->add_option("--size", args.size);
  av->add_option("--lambda1", args.lambda1);
  av->add_option("--lambda2", args.lambda2);
  av->add_option("--trials", args.trials);
  av->add_option("--seed", args.seed);
  av->callback(bind(run_affine_verify));
  auto* ab = aff->add_subcommand("bracket", "deformed bracket laws");
  ab->add_option("--size", args.size);
  ab->add_option("--seed", args.seed);
  ab->add_option("--trials", args.trials);
  ab->callback(bind(run_affine_bracket));

  auto* ex = app.add_subcommand("examples", "bundled inputs");
  ex->require_subcommand(1);
  auto* ee = ex->add_subcommand("emit", "write the bundled example files");
  ee->add_option("--dir", args.dir, "output directory");
  ee->callback(bind(run_examples_emit));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitInputError;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int code;
  try {
    code = handler(args);
  } catch (const CapacityError& e) {
    return fail_with("CapacityError", e.what(), kExitCapacity);
  } catch (const OverflowError& e) {
    return fail_with("OverflowError", e.what(), kExitCapacity);
  } catch (const StructuralError& e) {
    // input shape problems (missing file, malformed JSON, missing fields)
    // versus a mathematical check failing on well-formed input
    const std::string what = e.what();
    const bool input_shaped = what.find("cannot open") != std::string::npos ||
                              what.find("invalid JSON") != std::string::npos ||
                              what.find("field") != std::string::npos ||
                              what.find("needs") != std::string::npos;
    return fail_with("StructuralError", what,
                     input_shaped ? kExitInputError : kExitCheckFailed);
  } catch (const nlohmann::json::exception& e) {
    return fail_with("InputError", e.what(), kExitInputError);
  } catch (const std::exception& e) {
    return fail_with("Error", e.what(), kExitInputError);
  }
  const auto t1 = std::chrono::steady_clock::now();
  std::cerr << "wall_ms="
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << "\n";
  return code;
}
