#include "rosecover/selftest.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "rosecover/battery.hpp"
#include "rosecover/cw_check.hpp"
#include "rosecover/error.hpp"
#include "rosecover/edge_slide.hpp"
#include "rosecover/homology.hpp"
#include "rosecover/orbit_mover.hpp"

namespace rosecover {

namespace {

struct SuiteResult {
  bool ok = true;
  std::string detail;
};

using Suite = std::function<SuiteResult(const std::vector<BatteryCase> &)>;

struct Built {
  const BatteryCase *source;
  CoverGraph cover;
  HomologyBasis basis;
};

std::vector<Built> build_all(const std::vector<BatteryCase> &cases) {
  std::vector<Built> out;
  for (const auto &c : cases) {
    CoverGraph cover = build_cover(c.spec);
    HomologyBasis basis = cycle_basis(cover);
    out.push_back(Built{&c, std::move(cover), std::move(basis)});
  }
  return out;
}

SuiteResult fail(const std::string &what) { return SuiteResult{false, what}; }

SuiteResult suite_chevalley_weil(const std::vector<BatteryCase> &cases) {
  std::size_t count = 0;
  for (const auto &b : build_all(cases)) {
    if (!verify_chevalley_weil(b.cover, b.basis).verdict)
      return fail(b.source->name);
    ++count;
  }
  return {true, std::to_string(count) + " covers"};
}

SuiteResult suite_claims(const std::vector<BatteryCase> &cases) {
  std::size_t count = 0;
  for (const auto &b : build_all(cases)) {
    if (b.cover.n() < 3)
      continue;
    for (int j = 1; j <= b.cover.n(); ++j) {
      const auto components = petal_complement_components(b.cover, j);
      const auto g0 = petal_complement_subgroup(b.cover, j);
      if (components.size() * g0.order() != b.cover.vertex_count())
        return fail(b.source->name + ": component count");
      if (!inclusion_rank_test(b.cover, b.basis, components).injective)
        return fail(b.source->name + ": inclusion not injective for petal " + std::to_string(j));
      const HomologyBasis y0 = cycle_basis(b.cover, components.front());
      if (y0.rank() != std::size_t(b.cover.n() - 2) * g0.order() + 1)
        return fail(b.source->name + ": rank H_1(Y_0)");
      for (Element g : g0.members) {
        const Rational expected = g == 0 ? Rational(long(y0.rank())) : Rational(1);
        if (character(b.cover, y0, g) != expected)
          return fail(b.source->name + ": G_0 character on Y_0");
      }
      ++count;
    }
  }
  return {true, std::to_string(count) + " (cover, petal) pairs"};
}

SuiteResult suite_formula_oracle(const std::vector<BatteryCase> &cases) {
  std::mt19937_64 rng(0);
  std::size_t count = 0;
  for (const auto &b : build_all(cases)) {
    const auto rho = deck_action_matrices(b.cover, b.basis);
    const QMatrix id = QMatrix::identity(b.basis.rank());
    for (int j = 1; j <= b.cover.n(); ++j) {
      const SlideAutomorphism slide = make_slide(b.cover.n(), j, random_lifting_loop(b.cover, j, rng));
      const QMatrix formula = lifted_action_formula(slide, b.cover, b.basis).matrix;
      if (formula != lifted_action_oracle(slide, b.cover, b.basis))
        return fail(b.source->name + ": formula != oracle for " + format_word(slide.ell));
      for (const auto &r : rho)
        if (formula * r != r * formula)
          return fail(b.source->name + ": lifted slide is not G-equivariant");
      const QMatrix nil = formula - id;
      if (!(nil * nil).is_zero())
        return fail(b.source->name + ": (F - I)^2 != 0");
      ++count;
    }
  }
  return {true, std::to_string(count) + " slides"};
}

SuiteResult suite_klein_golden(const std::vector<BatteryCase> &) {
  const CoverGraph cover = build_cover(CoverSpec{builtin_group({"elementary_abelian", {2, 2}}), {{1, 2}}});
  const HomologyBasis basis = cycle_basis(cover);
  const Element qa = cover.image(1), qb = cover.image(2);
  if (basis.rank() != 5)
    return fail("rank");
  const auto iso = isotypic_decomposition(cover, basis);
  if (iso.dims != std::vector<std::size_t>{2, 1, 1, 1})
    return fail("isotypic dims");
  auto lift_class = [&](const std::string &w) {
    return path_class(cover, basis, lift_word(cover, parse_word(w), 0));
  };
  const QMatrix ra = deck_action_matrix(cover, basis, qa), rb = deck_action_matrix(cover, basis, qb);
  const HomologyClass A = lift_class("a1.a1"), B = lift_class("a2.a2");
  const HomologyClass bA = rb * A, aB = ra * B;
  const HomologyClass va = A - bA, vb = B - aB;
  const HomologyClass C = elevation_class(cover, basis, parse_word("a1.a2"), 0);
  const HomologyClass Cp = elevation_class(cover, basis, parse_word("a2.a1"), 0);
  const HomologyClass vab = C - Cp;
  const Rational minus_one(-1);
  if (is_zero(va) || ra * va != va || rb * va != minus_one * va)
    return fail("V_a");
  if (is_zero(vb) || ra * vb != minus_one * vb || rb * vb != vb)
    return fail("V_b");
  if (is_zero(vab) || ra * vab != minus_one * vab || rb * vab != minus_one * vab)
    return fail("V_ab");
  const HomologyClass t1 = A + bA, t2 = B + aB;
  if (ra * t1 != t1 || rb * t1 != t1 || ra * t2 != t2 || rb * t2 != t2 || rank_of({t1, t2}) != 2)
    return fail("transfer part");
  if (orbit_rank(cover, basis, lift_class("a1.a1.a1.a2^-1.a1.a2")) != 4)
    return fail("orbit of a^3 b^-1 a b");
  return {true, "mod-2 homology cover"};
}

SuiteResult suite_mover(const std::vector<BatteryCase> &cases) {
  std::size_t count = 0;
  for (const auto &b : build_all(cases)) {
    const std::size_t r = b.basis.rank();
    for (std::size_t k : {std::size_t(0), r / 2, r - 1}) {
      const HomologyClass v = unit_vector(r, k);
      if (b.cover.n() < 3) {
        try {
          move_vector(b.cover, b.basis, v);
          return fail(b.source->name + ": rank 2 cover was moved");
        } catch (const Error &e) {
          if (e.code() != Errc::RankTooSmall)
            throw;
        }
        break;
      }
      const MoveCertificate cert = move_vector(b.cover, b.basis, v);
      if (!verify_certificate(b.cover, b.basis, v, cert).ok)
        return fail(b.source->name + ": certificate rejected");
      ++count;
    }
  }
  return {true, std::to_string(count) + " certificates"};
}

SuiteResult suite_obstruction(const std::vector<BatteryCase> &) {
  const CoverGraph cover = build_cover(CoverSpec{builtin_group({"elementary_abelian", {2, 2}}), {{1, 2}}});
  const HomologyBasis basis = cycle_basis(cover);
  for (const char *w : {"a1", "a2", "a1.a2"}) {
    const auto report = elevation_rank_obstruction(cover, basis, parse_word(w));
    if (report.component_count != 2 || report.orbit_rank > 2 || !report.obstructed)
      return fail(std::string("elevation of ") + w);
  }
  if (elevation_rank_obstruction(cover, basis, parse_word("a1.a1")).obstructed)
    return fail("a^2 should not be obstructed");
  const auto comm = commutator_lift_check(cover, basis);
  if (!comm.lifts || !comm.class_nonzero)
    return fail("commutator");
  return {true, "mod-2 homology cover"};
}

} // namespace

bool run_selftest(const SelftestOptions &options, std::ostream &out) {
  std::vector<BatteryCase> cases;
  for (auto &c : standard_battery())
    if (!options.quick || c.spec.group.order() <= 8)
      cases.push_back(std::move(c));

  const std::map<std::string, Suite> suites{
      {"chevalley_weil", suite_chevalley_weil}, {"claims", suite_claims},
      {"formula_oracle", suite_formula_oracle}, {"klein_golden", suite_klein_golden},
      {"mover", suite_mover},                   {"obstruction", suite_obstruction},
  };
  bool all = true;
  std::size_t passed = 0;
  if (!options.inject_fault.empty() && !suites.count(options.inject_fault)) {
    out << "FAIL inject-fault: unknown suite '" << options.inject_fault << "'\n";
    all = false;
  }
  for (const auto &[name, suite] : suites) {
    SuiteResult result;
    try {
      result = suite(cases);
    } catch (const std::exception &e) {
      result = fail(std::string("exception: ") + e.what());
    }
    if (name == options.inject_fault)
      result = fail("injected fault");
    out << (result.ok ? "PASS " : "FAIL ") << name << ": " << result.detail << "\n";
    all = all && result.ok;
    passed += result.ok ? 1 : 0;
  }
  out << "selftest: " << passed << "/" << suites.size() << " suites passed\n";
  return all;
}

} // namespace rosecover
