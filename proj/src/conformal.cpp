#include "supell/conformal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "supell/curve.hpp"
#include "supell/group.hpp"
#include "supell/ratfunc.hpp"

namespace supell {

namespace {

QuadElem eval_at(const Poly& p, const QuadElem& x) {
  QuadElem acc = QuadElem::from_rational(0, x.d());
  for (long long k = p.degree(); k >= 0; --k)
    acc = acc * x + QuadElem::from_rational(p.coeff(k), x.d());
  return acc;
}

QuadElem eval_at(const RatFunc& f, const QuadElem& x) {
  QuadElem den = eval_at(f.den(), x);
  if (den.is_zero())
    throw InternalError("rational function has a pole at the given value");
  return eval_at(f.num(), x) / den;
}

RatFunc to_ratfunc(const FieldElem& e) {
  if (const auto* r = std::get_if<Rational>(&e.raw())) return RatFunc(*r);
  if (const auto* f = std::get_if<RatFunc>(&e.raw())) return *f;
  throw InternalError("expected a rational-function field element");
}

QuadElem eval_field(const FieldElem& e, const QuadElem& x) {
  return eval_at(to_ratfunc(e), x);
}

// Numerator of the projective cross product of R(s) with the target t,
// as a primitive polynomial in the parameter; its roots are the parameter
// values at which R actually carries s to t.
Poly residual_poly(const Mobius& R, const ProjPoint& s, const ProjPoint& t) {
  ProjPoint image = R.apply(s);
  RatFunc f = to_ratfunc(image.x * t.w - image.w * t.x);
  if (f.is_zero()) return Poly();
  return f.num().primitive();
}

bool is_degenerate_factor(const Poly& f) {
  // Parameter values with l^4 = 1 or l = 0 collapse the branch set.
  Poly x = Poly::variable();
  Poly collapse = x.pow(5) - x;
  return poly_divides(f, collapse);
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (long long k = a.degree(); k >= 0; --k)
    if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
  return false;
}

std::vector<QuadElem> quadratic_roots(const Poly& f) {
  if (f.degree() != 2)
    throw InternalError("expected a quadratic exceptional factor");
  Rational a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
  Rational disc = b * b - 4 * a * c;
  if (disc == 0 || denominator(disc) != 1)
    throw InternalError(
        "exceptional factor has a zero or non-integral discriminant");
  auto [s, d] = squarefree_split(numerator(disc).convert_to<long long>());
  if (d == 1)
    throw InternalError("irreducible quadratic with square discriminant");
  Rational half = Rational(1) / (2 * a);
  Rational sq(s);
  return {QuadElem(-b * half, sq * half, d),
          QuadElem(-b * half, -sq * half, d)};
}

// Specialize a map with rational-function entries at a concrete parameter
// value. Denominators are cleared and the entry gcd removed first, so the
// result is defined whenever the specialized matrix is nonsingular.
Mobius specialize(const Mobius& R, const QuadElem& x) {
  std::array<RatFunc, 4> entry = {to_ratfunc(R.a()), to_ratfunc(R.b()),
                                  to_ratfunc(R.c()), to_ratfunc(R.d())};
  Poly common(Rational(1));
  for (const auto& e : entry) common = common * e.den();
  std::array<Poly, 4> cleared;
  for (int k = 0; k < 4; ++k) {
    RatFunc scaled = entry[k] * RatFunc(common);
    if (!scaled.is_polynomial())
      throw InternalError("denominator clearing left a true fraction");
    cleared[k] = scaled.num();
  }
  Poly g = poly_gcd(poly_gcd(cleared[0], cleared[1]),
                    poly_gcd(cleared[2], cleared[3]));
  std::array<QuadElem, 4> v = {eval_at(cleared[0] / g, x),
                               eval_at(cleared[1] / g, x),
                               eval_at(cleared[2] / g, x),
                               eval_at(cleared[3] / g, x)};
  if ((v[0] * v[3] - v[1] * v[2]).is_zero())
    throw InternalError("map degenerates at a claimed exceptional value");
  return Mobius(FieldElem(v[0]), FieldElem(v[1]), FieldElem(v[2]),
                FieldElem(v[3]));
}

void require_valid_member(long long n, long long a) {
  CurveParams params = make_curve_params(n, a);
  if (!params.c)
    throw std::invalid_argument(
        "the pair (n, a) admits no integer twist parameter c");
}

}  // namespace

ObstructionResult obstruction_search(long long n, long long a) {
  require_valid_member(n, a);

  RatFunc x = RatFunc::variable();
  RatFunc one(Rational(1));
  Poly var = Poly::variable();

  // Source configuration: images of the branch set under x -> x^2.
  std::array<ProjPoint, 5> source = {
      ProjPoint::finite(FieldElem(RatFunc(Rational(0)))),
      ProjPoint{FieldElem(one), FieldElem(RatFunc())},
      ProjPoint::finite(FieldElem(one)),
      ProjPoint::finite(FieldElem(x * x)),
      ProjPoint::finite(FieldElem(one / (x * x)))};

  // Target configuration: images of the branch set under x -> x + 1/x.
  RatFunc m = RatFunc(var * var + Poly(Rational(1)), var);
  struct Target {
    std::string label;
    ProjPoint point;
  };
  std::array<Target, 5> target = {
      Target{"inf", ProjPoint{FieldElem(one), FieldElem(RatFunc())}},
      Target{"2", ProjPoint::finite(FieldElem(RatFunc(Rational(2))))},
      Target{"-2", ProjPoint::finite(FieldElem(RatFunc(Rational(-2))))},
      Target{"m", ProjPoint::finite(FieldElem(m))},
      Target{"-m", ProjPoint::finite(FieldElem(-m))}};

  ObstructionResult result;
  result.n = n;
  result.a = a;

  std::map<std::vector<Rational>, Poly> factor_union;
  auto factor_key = [](const Poly& f) {
    std::vector<Rational> key;
    for (long long k = 0; k <= f.degree(); ++k) key.push_back(f.coeff(k));
    return key;
  };

  // The order data forces the images of 0 and inf into {2, -2}; the other
  // three sources spread over {inf, m, -m} freely.
  std::array<std::array<int, 3>, 6> perms = {{{0, 3, 4},
                                              {0, 4, 3},
                                              {3, 0, 4},
                                              {4, 0, 3},
                                              {3, 4, 0},
                                              {4, 3, 0}}};
  for (int swap01 = 0; swap01 < 2; ++swap01) {
    for (const auto& perm : perms) {
      std::array<int, 5> assigned = {swap01 ? 2 : 1, swap01 ? 1 : 2, perm[0],
                                     perm[1], perm[2]};
      ObstructionAssignment rec;
      for (int k = 0; k < 5; ++k)
        rec.target_labels[k] = target[assigned[k]].label;

      Mobius R = mobius_from_three_points(
          source[0], source[1], source[2], target[assigned[0]].point,
          target[assigned[1]].point, target[assigned[2]].point);
      rec.constraint_polys = {
          residual_poly(R, source[3], target[assigned[3]].point),
          residual_poly(R, source[4], target[assigned[4]].point)};
      rec.common_factor =
          poly_gcd(rec.constraint_polys[0], rec.constraint_polys[1]);

      if (rec.common_factor.degree() > 0) {
        for (const Poly& f : factor_poly(rec.common_factor)) {
          if (is_degenerate_factor(f)) continue;
          rec.surviving_factors.push_back(f);
          factor_union.emplace(factor_key(f), f);
        }
      }

      int index = static_cast<int>(result.assignments.size());
      for (const Poly& f : rec.surviving_factors) {
        for (const QuadElem& root : quadratic_roots(f)) {
          Mobius specialized = specialize(R, root);
          bool good = true;
          for (int k = 0; k < 5 && good; ++k) {
            ProjPoint s{FieldElem(eval_field(source[k].x, root)),
                        FieldElem(eval_field(source[k].w, root))};
            ProjPoint t{
                FieldElem(eval_field(target[assigned[k]].point.x, root)),
                FieldElem(eval_field(target[assigned[k]].point.w, root))};
            good = specialized.apply(s).same_point(t);
          }
          if (!good)
            throw InternalError(
                "specialized map fails a correspondence it was solved for");
          result.witnesses.push_back(
              ObstructionWitness{f, root, index, specialized, good});
        }
      }
      result.assignments.push_back(std::move(rec));
    }
  }

  result.assignments_tested = static_cast<int>(result.assignments.size());
  for (auto& [key, f] : factor_union) result.exceptional_factors.push_back(f);
  std::sort(result.exceptional_factors.begin(),
            result.exceptional_factors.end(), poly_less);
  for (const Poly& f : result.exceptional_factors)
    for (const QuadElem& r : quadratic_roots(f))
      result.exceptional_roots.push_back(r);
  std::sort(result.exceptional_roots.begin(), result.exceptional_roots.end(),
            [](const QuadElem& u, const QuadElem& v) {
              if (u.p() != v.p()) return u.p() < v.p();
              return u.q() < v.q();
            });
  return result;
}

ExceptionalAutReport exceptional_automorphism_report(long long n,
                                                     long long a) {
  require_valid_member(n, a);

  ExceptionalAutReport rep{.lambda0 = QuadElem(1, 1, 2)};
  const QuadElem& l0 = rep.lambda0;
  // Admissibility of the pinned value, via the branch-set machinery.
  if (!branch_set(n, LambdaSpec{l0}).distinct)
    throw InternalError("l0 = 1+sqrt(2) should give eight distinct points");

  Mobius T(FieldElem(-1), FieldElem(1), FieldElem(1), FieldElem(1));
  rep.involution = T.is_involution();

  auto pt = [](const QuadElem& v) {
    return ProjPoint::finite(FieldElem(v));
  };
  QuadElem zero = QuadElem::from_rational(0, 2);
  QuadElem one = QuadElem::from_rational(1, 2);
  std::vector<ProjPoint> points = {pt(zero),
                                   ProjPoint{FieldElem(one), FieldElem(zero)},
                                   pt(one),
                                   pt(-one),
                                   pt(l0),
                                   pt(-l0),
                                   pt(one / l0),
                                   pt(-(one / l0))};
  const std::vector<std::string>& labels = branch_point_labels();

  rep.swaps_fixed_loci = T.apply(points[0]).same_point(points[2]) &&
                         T.apply(points[1]).same_point(points[3]);

  rep.permutes_branch_set = true;
  std::vector<bool> hit(points.size(), false);
  for (size_t k = 0; k < points.size(); ++k) {
    ProjPoint image = T.apply(points[k]);
    std::string image_label = image.str();
    bool found = false;
    for (size_t j = 0; j < points.size(); ++j) {
      if (image.same_point(points[j])) {
        image_label = labels[j];
        found = true;
        if (hit[j]) rep.permutes_branch_set = false;
        hit[j] = true;
        break;
      }
    }
    if (!found) rep.permutes_branch_set = false;
    rep.branch_images.emplace_back(labels[k], image_label);
  }

  rep.ok = rep.involution && rep.swaps_fixed_loci && rep.permutes_branch_set;
  return rep;
}

bool verify_exceptional_automorphism(long long n, long long a) {
  return exceptional_automorphism_report(n, a).ok;
}

QuotientSquareReport quotient_maps_consistency() {
  Poly var = Poly::variable();
  RatFunc x = RatFunc::variable();
  RatFunc p1 = x * x;
  RatFunc p2 = RatFunc(var * var + Poly(Rational(1)), var);
  RatFunc neg = -x;
  RatFunc inv = RatFunc(Poly(Rational(1)), var);
  RatFunc t = RatFunc(Poly(Rational(1)) - var, Poly(Rational(1)) + var);

  QuotientSquareReport rep;
  rep.p1_invariant = p1.substitute(neg) == p1;
  rep.p2_invariant = p2.substitute(inv) == p2;
  RatFunc p2t = p2.substitute(t);
  rep.square_commutes = p2t.substitute(neg) == p2t;
  rep.identity_square_fails = !(p2.substitute(neg) == p2);
  rep.ok = rep.p1_invariant && rep.p2_invariant && rep.square_commutes &&
           rep.identity_square_fails;
  return rep;
}

}  // namespace supell
