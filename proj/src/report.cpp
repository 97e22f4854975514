#include "supell/report.hpp"

#include <sstream>

#include "supell/conformal.hpp"
#include "supell/group.hpp"
#include "supell/rotation.hpp"

namespace supell {

namespace {

Json signature_entry(const Signature& s) {
  Json j;
  j["text"] = s.str();
  j["json"] = signature_to_json(s);
  return j;
}

Json rotation_json(const RotationNumber& r) { return Json::array({r.num, r.order}); }

Json delta_rows_json(const std::vector<DeltaRow>& rows) {
  Json arr = Json::array();
  for (const DeltaRow& row : rows) {
    Json r;
    r["generator"] = row.generator;
    r["exponent"] = row.exponent;
    r["element"] = Json::array({row.element.first, row.element.second});
    r["point"] = row.point;
    r["rotation"] = rotation_json(row.rotation);
    arr.push_back(std::move(r));
  }
  return arr;
}

}  // namespace

Json signature_to_json(const Signature& s) {
  return Json::array({s.genus(), s.periods()});
}

Json classify_report(long long modulus, const Signature& sig, MoveSet moves) {
  Classification cl = classify_orbits(modulus, sig, moves);
  Json j;
  j["modulus"] = cl.modulus;
  j["signature"] = cl.signature.str();
  j["move_set"] = move_set_name(cl.moves);
  j["vector_count"] = cl.vector_count;
  j["class_count"] = cl.classes.size();
  Json classes = Json::array();
  for (const OrbitClass& c : cl.classes) {
    Json e;
    e["representative"] = c.representative;
    e["size"] = c.size;
    classes.push_back(std::move(e));
  }
  j["classes"] = std::move(classes);
  return j;
}

Json equiv_report(const CyclicGenVec& v1, const CyclicGenVec& v2,
                  MoveSet moves) {
  Json j;
  j["modulus"] = v1.modulus;
  j["v1"] = v1.entries;
  j["v2"] = v2.entries;
  j["move_set"] = move_set_name(moves);
  std::optional<long long> s = scalar_equivalent(v1, v2);
  j["scalar"] = s ? Json(*s) : Json(nullptr);
  std::optional<EquivalenceWitness> w = equivalent_under(moves, v1, v2);
  j["equivalent"] = w.has_value();
  if (w) {
    Json wj;
    wj["scalar"] = w->scalar;
    wj["permutation"] = w->perm;
    wj["negated"] = w->negated;
    j["witness"] = std::move(wj);
    j["necessity_check"] =
        gilman_necessity_check(v1, v2, w->negated ? v1.modulus - w->scalar
                                                  : w->scalar,
                               w->perm);
  }
  return j;
}

Json family_report(long long n, long long a, const LambdaSpec& lambda) {
  CurveParams params = make_curve_params(n, a, lambda);
  CaseInfo info = classify_case(n, a);

  Json j;
  j["n"] = n;
  j["a"] = a;
  j["lambda"] = params.lambda.str();
  j["c"] = params.c ? Json(*params.c) : Json(nullptr);
  j["case"] = info.tag;
  Json sing = Json::array();
  for (const auto& p : info.singular_points) sing.push_back(point_str(p));
  j["singular_points"] = std::move(sing);
  j["genus"] = family_genus(n);

  BranchSet branch = branch_set(n, params.lambda);
  Json bp;
  bp["multiplicity"] = branch.multiplicity;
  bp["distinct"] = branch.distinct;
  Json pts = Json::array();
  for (const BranchPointValue& p : branch.points) {
    Json e;
    e["label"] = p.label;
    e["value"] = p.at_infinity ? "inf" : p.value;
    pts.push_back(std::move(e));
  }
  bp["points"] = std::move(pts);
  j["branch_points"] = std::move(bp);

  Json charts = Json::array();
  for (const ChartExponents& ch : all_chart_exponents(n, a)) {
    Json e;
    e["point"] = point_str(ch.point);
    e["orders"] = Json::array({ch.ex, ch.ey, ch.ez});
    charts.push_back(std::move(e));
  }
  j["chart_exponents"] = std::move(charts);

  if (!params.c) {
    j["automorphisms"] =
        "no exponent-c automorphisms: (2a+2)/2^{n-1} is not an integer";
    return j;
  }
  if (n < 2) {
    j["automorphisms"] = "group model requires n >= 2";
    return j;
  }

  ActionModel model = make_action_model(n, a);
  const GroupSpec& spec = model.spec;
  j["twist"] = spec.is_abelian() ? "abelian" : "semidirect";
  Json grp;
  grp["order"] = spec.order();
  grp["tau1_order"] = spec.modulus();
  grp["commutation_unit"] = spec.twist();
  j["group"] = std::move(grp);

  Json vec = Json::array();
  for (GroupElement g : model.vec) vec.push_back(spec.element_str(g));
  j["action_vector"] = std::move(vec);
  j["action_signature"] = signature_entry(model.signature);

  PresentationReport pres = verify_presentation(spec, a);
  Json pj;
  pj["which"] = pres.which;
  pj["horizontal_exponent"] = pres.horizontal_exponent;
  pj["relations_hold"] = pres.relations_hold;
  pj["generates"] = pres.generates;
  if (!pres.failed_relations.empty())
    pj["failed_relations"] = pres.failed_relations;
  j["presentation"] = std::move(pj);

  j["order_two_mixed_exponents"] = order_two_mixed_exponents(spec);

  Json sphere;
  sphere["kernel_is_square_subgroup"] = sphere_kernel_is_square_subgroup(spec);
  sphere["tau1_fixed_points"] = sphere_fixed_branch_points(spec.tau1());
  sphere["tau2_fixed_points"] = sphere_fixed_branch_points(spec.tau2());
  j["sphere_action"] = std::move(sphere);

  std::vector<NamedSubgroup> subs = distinguished_subgroups(model);
  Json sj = Json::array();
  for (const NamedSubgroup& sub : subs) {
    SubgroupAction act = subgroup_signature(model, sub.elements);
    Json e;
    e["name"] = sub.name;
    Json sg;
    sg["generators"] = Json::array({spec.element_str(sub.generator)});
    sg["order"] = sub.elements.size();
    e["subgroup"] = std::move(sg);
    e["signature"] = act.signature.str();
    e["fixed_points"] = act.fixed_points;
    e["quotient_genus"] = act.quotient_genus;
    Json cc = Json::array();
    for (const NamedSubgroup& other : subs) {
      if (other.elements.size() != sub.elements.size()) continue;
      if (conjugating_element(spec, sub.elements, other.elements))
        cc.push_back(other.name);
    }
    e["conjugacy_class"] = std::move(cc);
    sj.push_back(std::move(e));
  }
  j["subgroups"] = std::move(sj);

  SubgroupAction whole = subgroup_signature(model, spec.elements());
  j["full_group_signature"] = whole.signature.str();

  if (info.tag == 1 || info.tag == 4 || info.tag == 5) {
    j["delta_table"] = delta_rows_json(delta_table(n, a));
    Json tuples;
    tuples["H1"] = subgroup_tuple_from_table(n, a, 1);
    tuples["H2"] = subgroup_tuple_from_table(n, a, 2);
    j["subgroup_tuples"] = std::move(tuples);
  }
  return j;
}

Json harvey_report(long long m, long long eta) {
  Json j;
  j["m"] = m;
  j["eta"] = eta;
  j["xi"] = harvey_xi(eta, m);
  bool consistent = true;
  for (long long t : units_mod(m))
    consistent = consistent && generator_change_consistency(eta, m, t);
  j["generator_change_consistent"] = consistent;
  return j;
}

Json conformal_report(long long n, long long a) {
  ObstructionResult res = obstruction_search(n, a);
  Json j;
  j["n"] = res.n;
  j["a"] = res.a;
  j["assignments_tested"] = res.assignments_tested;

  const std::array<const char*, 5> source = {"0", "inf", "1", "lambda^2",
                                             "lambda^-2"};
  Json cons = Json::array();
  for (const ObstructionAssignment& rec : res.assignments) {
    Json e;
    Json asg;
    for (int k = 0; k < 5; ++k) asg[source[k]] = rec.target_labels[k];
    e["assignment"] = std::move(asg);
    Json cp = Json::array();
    for (const Poly& p : rec.constraint_polys) cp.push_back(p.str("lambda"));
    e["constraints"] = std::move(cp);
    e["common_factor"] = rec.common_factor.str("lambda");
    Json sf = Json::array();
    for (const Poly& p : rec.surviving_factors) sf.push_back(p.str("lambda"));
    e["surviving_factors"] = std::move(sf);
    cons.push_back(std::move(e));
  }
  j["constraint_polynomials"] = std::move(cons);

  Json ef = Json::array();
  for (const Poly& p : res.exceptional_factors) ef.push_back(p.str("lambda"));
  j["exceptional_factors"] = std::move(ef);
  Json roots = Json::array();
  for (const QuadElem& r : res.exceptional_roots) roots.push_back(r.str());
  j["exceptional_roots_symbolic"] = std::move(roots);

  Json wits = Json::array();
  for (const ObstructionWitness& w : res.witnesses) {
    Json e;
    e["factor"] = w.factor.str("lambda");
    e["root"] = w.root.str();
    e["assignment"] = w.assignment_index;
    e["map"] = w.map.str("z");
    e["verified"] = w.verified;
    wits.push_back(std::move(e));
  }
  j["witnesses"] = std::move(wits);

  ExceptionalAutReport aut = exceptional_automorphism_report(n, a);
  Json aj;
  aj["lambda0"] = aut.lambda0.str();
  aj["map"] = "(1 - z)/(1 + z)";
  aj["involution"] = aut.involution;
  aj["swaps_fixed_loci"] = aut.swaps_fixed_loci;
  aj["permutes_branch_set"] = aut.permutes_branch_set;
  Json imgs;
  for (const auto& [from, to] : aut.branch_images) imgs[from] = to;
  aj["branch_images"] = std::move(imgs);
  aj["ok"] = aut.ok;
  j["exceptional_automorphism"] = std::move(aj);

  QuotientSquareReport sq = quotient_maps_consistency();
  Json qj;
  qj["p1_invariant"] = sq.p1_invariant;
  qj["p2_invariant"] = sq.p2_invariant;
  qj["square_commutes"] = sq.square_commutes;
  qj["identity_square_fails"] = sq.identity_square_fails;
  qj["ok"] = sq.ok;
  j["quotient_square"] = std::move(qj);
  return j;
}

Json wrap_report(const std::string& command, Json inputs, Json results,
                 Json caveats) {
  Json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["results"] = std::move(results);
  j["caveats"] = std::move(caveats);
  return j;
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool all_scalar(const Json& arr) {
  for (const auto& e : arr)
    if (!is_scalar(e)) return false;
  return true;
}

std::string scalar_str(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string inline_array(const Json& arr) {
  std::string out = "[";
  bool first = true;
  for (const auto& e : arr) {
    if (!first) out += ", ";
    out += scalar_str(e);
    first = false;
  }
  return out + "]";
}

void render(std::ostringstream& os, const Json& j, int indent) {
  std::string pad(2 * indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (is_scalar(v)) {
        os << pad << it.key() << ": " << scalar_str(v) << "\n";
      } else if (v.is_array() && all_scalar(v)) {
        os << pad << it.key() << ": " << inline_array(v) << "\n";
      } else {
        os << pad << it.key() << ":\n";
        render(os, v, indent + 1);
      }
    }
    return;
  }
  if (j.is_array()) {
    int k = 0;
    for (const auto& e : j) {
      if (is_scalar(e)) {
        os << pad << "- " << scalar_str(e) << "\n";
      } else if (e.is_array() && all_scalar(e)) {
        os << pad << "- " << inline_array(e) << "\n";
      } else {
        os << pad << "- [" << k << "]\n";
        render(os, e, indent + 1);
      }
      ++k;
    }
    return;
  }
  os << pad << scalar_str(j) << "\n";
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(os, j, 0);
  return os.str();
}

}  // namespace supell
