#include "trussalg/io.hpp"

#include <filesystem>
#include <fstream>
#include "json.hpp"

namespace trussalg {

using nlohmann::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw StructuralError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

namespace {

std::vector<int> int_vector(const json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_array())
    throw StructuralError("missing or non-array field '" + key + "'");
  std::vector<int> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) throw StructuralError("non-integer entry in '" + key + "'");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

TrussInput read_truss_json(const json& j) {
  if (j.contains("mult")) {
    const FiniteAbelianGroup G(int_vector(j, "group"));
    const std::vector<Elem> mult = int_vector(j, "mult");
    return validate_truss(G, mult, j.value("name", std::string{}));
  }
  if (j.contains("a") && j.contains("b") && j.contains("c")) {
    ZTrussParams p{j["a"].get<long long>(), j["b"].get<long long>(), j["c"].get<long long>()};
    p.require_constraint();
    return p;
  }
  throw StructuralError("truss file needs either group/mult or a/b/c fields");
}

TrussInput read_truss_file(const std::string& path) { return read_truss_json(load_json_file(path)); }

MapInput read_map_json(const json& j) {
  if (j.contains("table")) return FnTable(int_vector(j, "table"));
  if (j.contains("p") && j.contains("q"))
    return AffineIntMap{j["p"].get<long long>(), j["q"].get<long long>()};
  throw StructuralError("map file needs either a table or p/q fields");
}

MapInput read_map_file(const std::string& path) { return read_map_json(load_json_file(path)); }

Cochain read_cochain_json(const FiniteTruss& T, const json& j) {
  if (!j.contains("arity")) throw StructuralError("cochain file needs an arity field");
  return make_cochain(T, j["arity"].get<int>(), int_vector(j, "table"));
}

json truss_to_json(const FiniteTruss& T) {
  json j;
  if (!T.name().empty()) j["name"] = T.name();
  j["group"] = T.group().cyclic_orders();
  j["mult"] = T.table();
  return j;
}

json to_json(const IsoClassReport& r) {
  return json{{"total_valid", r.total_valid},
              {"class_count", r.class_count},
              {"ring_class_count", r.ring_class_count},
              {"representatives", r.representatives}};
}

json to_json(const CohomologyReport& r) {
  return json{{"degree", r.degree},
              {"basepoint", r.basepoint},
              {"cocycle_count", r.cocycle_count},
              {"coboundary_count", r.coboundary_count},
              {"class_count", r.class_count},
              {"class_representatives", r.class_representatives}};
}

json to_json(const NijenhuisReport& r) {
  return json{{"is_heap_endo", r.is_heap_endo},
              {"torsion_trivial", r.torsion_trivial},
              {"product_associative", r.product_associative},
              {"torsion_is_2cocycle", r.torsion_is_2cocycle},
              {"witness", r.witness}};
}

json to_json(const ClassifyZReport& r) {
  auto maps = [](const std::vector<AffineIntMap>& v) {
    json arr = json::array();
    for (const auto& m : v) arr.push_back(json{{"p", m.p}, {"q", m.q}});
    return arr;
  };
  return json{{"a", r.params.a},
              {"b", r.params.b},
              {"c", r.params.c},
              {"bound", r.bound},
              {"brute_force", maps(r.brute_force)},
              {"closed_form", maps(r.closed_form)},
              {"agreement", r.agree},
              {"a_zero_all_associative", r.a_zero_all_associative}};
}

json to_json(const AffineVerifyReport& r) {
  return json{{"coset_idempotent", r.coset_idempotent},
              {"coset_closure", r.coset_closure},
              {"product_rule_matches_embedding", r.product_rule_matches_embedding},
              {"lift_ne_condition", r.lift_ne_condition},
              {"lift_torsion_trivial", r.lift_torsion_trivial},
              {"example_operator_affine", r.example_operator_affine},
              {"example_operator_nijenhuis", r.example_operator_nijenhuis},
              {"product_biaffine", r.product_biaffine},
              {"bracket_equals_commutator", r.bracket_equals_commutator},
              {"bracket_antisymmetric", r.bracket_antisymmetric},
              {"bracket_jacobi", r.bracket_jacobi},
              {"linearisation_intertwines", r.linearisation_intertwines},
              {"pass", r.all()}};
}

std::vector<std::string> emit_examples(const std::string& directory) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  std::vector<std::string> written;
  auto write = [&](const std::string& name, const json& j) {
    const fs::path p = fs::path(directory) / name;
    std::ofstream out(p);
    if (!out) throw StructuralError("cannot write " + p.string());
    out << j.dump(2) << "\n";
    written.push_back(name);
  };

  const struct {
    const char* label;
    std::vector<int> orders;
  } groups[] = {{"z2", {2}}, {"z3", {3}}, {"z4", {4}}, {"z2z2", {2, 2}}};
  for (const auto& g : groups) {
    const FiniteAbelianGroup G(g.orders);
    for (const FiniteTruss& T : standard_products(G))
      write(std::string(g.label) + "_" + T.name() + ".json", truss_to_json(T));
  }
  // short aliases kept for the documented invocations
  write("z2_leftproj.json", truss_to_json(left_projection_truss(FiniteAbelianGroup({2}))));
  write("z3_leftproj.json", truss_to_json(left_projection_truss(FiniteAbelianGroup({3}))));

  const ZTrussParams zparams[] = {{1, 0, 0}, {1, 1, 0}, {2, 3, 3}, {6, 3, 1}};
  for (const auto& p : zparams)
    write("ztruss_" + std::to_string(p.a) + "_" + std::to_string(p.b) + "_" +
              std::to_string(p.c) + ".json",
          json{{"a", p.a}, {"b", p.b}, {"c", p.c}});

  write("map_2m_plus_3.json", json{{"p", 2}, {"q", 3}});
  write("map_3m.json", json{{"p", 3}, {"q", 0}});
  // identity heap endomorphism on Z4 and the constant map to 0 (idempotent
  // of the addition truss on Z4 is 0)
  write("map_z4_identity.json", json{{"table", {0, 1, 2, 3}}});
  write("map_z4_const0.json", json{{"table", {0, 0, 0, 0}}});
  return written;
}

}  // namespace trussalg
