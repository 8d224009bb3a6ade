#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <string>

#include "lcho/fock.hpp"
#include "lcho/oscillator.hpp"

namespace fock = lcho::fock;
namespace alg = lcho::algebra;
using alg::cplx;
using alg::Label;

namespace {

Eigen::VectorXcd basis_state(int n1, int n2, int truncation) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero((truncation + 1) * (truncation + 1));
  v(fock::basis_index(n1, n2, truncation)) = 1.0;
  return v;
}

const alg::CommutatorReport& find(const std::vector<alg::CommutatorReport>& reports, Label a, Label b) {
  for (const auto& r : reports) {
    if (r.first == a && r.second == b) return r;
  }
  throw std::runtime_error("pair not found");
}

}  // namespace

TEST(StructureTable, PrintedRelations) {
  const auto jj = alg::structure(Label::J1, Label::J2);
  EXPECT_EQ(jj[alg::index(Label::J3)], alg::kI);
  EXPECT_EQ(alg::structure(Label::J2, Label::J1)[alg::index(Label::J3)], -alg::kI);
  EXPECT_EQ(alg::structure(Label::K3, Label::Q3)[alg::index(Label::S0)], -alg::kI);
  EXPECT_EQ(alg::structure(Label::K1, Label::Q2)[alg::index(Label::S0)], cplx{});
  EXPECT_EQ(alg::structure(Label::K2, Label::S0)[alg::index(Label::Q2)], -alg::kI);
  EXPECT_EQ(alg::structure(Label::Q3, Label::S0)[alg::index(Label::K3)], alg::kI);
  EXPECT_EQ(alg::structure(Label::S0, Label::K3)[alg::index(Label::Q3)], alg::kI);
  EXPECT_EQ(alg::structure(Label::Q1, Label::Q2)[alg::index(Label::J3)], -alg::kI);
  EXPECT_EQ(alg::structure(Label::K3, Label::K1)[alg::index(Label::J2)], -alg::kI);
  EXPECT_EQ(alg::format(alg::structure(Label::J2, Label::S0)), "0");
  EXPECT_EQ(alg::format(alg::structure(Label::J1, Label::J2)), "+i J3");
  EXPECT_EQ(alg::all_pairs().size(), 45u);
}

TEST(ModeOperators, LadderElements) {
  const auto one = fock::build_mode_operators(1);
  const Eigen::VectorXcd lowered = one.a1.matrix * basis_state(1, 0, 1);
  EXPECT_NEAR((lowered - basis_state(0, 0, 1)).norm(), 0.0, 1e-15);

  const auto three = fock::build_mode_operators(3);
  const cplx element = basis_state(2, 0, 3).dot(three.a1_dag.matrix * basis_state(1, 0, 3));
  EXPECT_NEAR(std::abs(element - std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NEAR((three.a2.matrix * basis_state(1, 0, 3)).norm(), 0.0, 0.0);
}

TEST(ModeOperators, CanonicalCommutators) {
  for (int n : {2, 5, 9}) {
    const auto ops = fock::build_mode_operators(n);
    const Eigen::MatrixXcd c12 = ops.a1.matrix * ops.a2_dag.matrix - ops.a2_dag.matrix * ops.a1.matrix;
    EXPECT_EQ(c12.cwiseAbs().maxCoeff(), 0.0);
    const Eigen::MatrixXcd c11 = ops.a1.matrix * ops.a1_dag.matrix - ops.a1_dag.matrix * ops.a1.matrix;
    const Eigen::MatrixXcd c22 = ops.a2.matrix * ops.a2_dag.matrix - ops.a2_dag.matrix * ops.a2.matrix;
    for (int n1 = 0; n1 <= n; ++n1) {
      for (int n2 = 0; n2 <= n; ++n2) {
        const int i = fock::basis_index(n1, n2, n);
        if (n1 < n) {
          EXPECT_NEAR(std::abs(c11(i, i) - 1.0), 0.0, 1e-13);
          EXPECT_NEAR(c11.row(i).cwiseAbs().sum(), 1.0, 1e-13);
        }
        if (n2 < n) EXPECT_NEAR(std::abs(c22(i, i) - 1.0), 0.0, 1e-13);
      }
    }
  }
  EXPECT_THROW(fock::build_mode_operators(0), lcho::truncation_error);
  EXPECT_THROW(fock::build_mode_operators(fock::kMaxDenseTruncation + 1), lcho::truncation_error);
}

TEST(Generators, SpectralExamples) {
  const auto gens = fock::build_generators(6);
  const Eigen::VectorXcd vac = basis_state(0, 0, 6);
  EXPECT_NEAR((gens[Label::S0].matrix * vac - 0.5 * vac).norm(), 0.0, 1e-15);
  for (int n1 = 0; n1 <= 6; ++n1) {
    for (int n2 = 0; n2 <= 6; ++n2) {
      const auto s = basis_state(n1, n2, 6);
      EXPECT_NEAR((gens[Label::J3].matrix * s - 0.5 * (n1 - n2) * s).norm(), 0.0, 1e-15);
      if (n2 < 6) EXPECT_NEAR((gens[Label::S0].matrix * s - 0.5 * (n1 + n2 + 1) * s).norm(), 0.0, 1e-15);
    }
  }
  const Eigen::VectorXcd q3_vac = gens[Label::Q3].matrix * vac;
  EXPECT_NEAR((q3_vac - 0.5 * alg::kI * basis_state(1, 1, 6)).norm(), 0.0, 1e-15);
}

TEST(Generators, ConventionsDifferOnlyInK) {
  const auto printed = fock::build_generators(5, fock::SignConvention::printed);
  const auto closed = fock::build_generators(5, fock::SignConvention::closed);
  for (Label l : alg::kAllLabels) {
    const double sign = (l == Label::K1 || l == Label::K2 || l == Label::K3) ? -1.0 : 1.0;
    EXPECT_EQ((closed[l].matrix - sign * printed[l].matrix).cwiseAbs().maxCoeff(), 0.0) << alg::name(l);
  }
  // K3 as printed: (a1+ a2+ + a1 a2)/2 takes |0,0> to |1,1>/2.
  const Eigen::VectorXcd k3_vac = printed[Label::K3].matrix * basis_state(0, 0, 5);
  EXPECT_NEAR((k3_vac - 0.5 * basis_state(1, 1, 5)).norm(), 0.0, 1e-15);
}

TEST(Generators, HermitianOnSafeSubspace) {
  for (int n : {4, 8, 12}) {
    EXPECT_LE(fock::hermiticity_deviation(fock::build_generators(n)), 1e-12);
    EXPECT_LE(fock::hermiticity_deviation(fock::build_generators(n, fock::SignConvention::printed)), 1e-12);
  }
  EXPECT_THROW(fock::build_generators(3), lcho::truncation_error);
}

TEST(Algebra, ClosedConventionPassesAllPairs) {
  for (int n : {4, 8, 12}) {
    const auto reports = fock::verify_algebra(fock::build_generators(n));
    ASSERT_EQ(reports.size(), 45u);
    for (const auto& r : reports) EXPECT_TRUE(r.pass) << n << " " << r.pair_name() << " " << r.max_deviation;
  }
}

TEST(Algebra, NamedExamples) {
  const auto reports = fock::verify_algebra(fock::build_generators(8));
  EXPECT_LE(find(reports, Label::J1, Label::J2).max_deviation, 1e-10);
  EXPECT_LE(find(reports, Label::K3, Label::Q3).max_deviation, 1e-10);
  EXPECT_LE(find(reports, Label::J2, Label::S0).max_deviation, 1e-14);
}

TEST(Algebra, PrintedConventionFailsExactlyTheKQAndKSBrackets) {
  const auto reports = fock::verify_algebra(fock::build_generators(8, fock::SignConvention::printed));
  std::set<std::string> failing;
  for (const auto& r : reports) {
    if (!r.pass) failing.insert(r.pair_name());
  }
  const std::set<std::string> expected = {"[K1,Q1]", "[K2,Q2]", "[K3,Q3]", "[K1,S0]", "[K2,S0]",
                                          "[K3,S0]", "[Q1,S0]", "[Q2,S0]", "[Q3,S0]"};
  EXPECT_EQ(failing, expected);
  // Each failure is a pure sign flip: the measured bracket is minus the table.
  const auto constants = fock::structure_constants(fock::build_generators(8, fock::SignConvention::printed));
  const auto pairs = alg::all_pairs();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto table = alg::structure(pairs[p].first, pairs[p].second);
    const std::string label = std::string("[") + alg::name(pairs[p].first) + "," + alg::name(pairs[p].second) + "]";
    const double sign = expected.count(label) ? -1.0 : 1.0;
    for (int k = 0; k < alg::kGeneratorCount; ++k) {
      EXPECT_NEAR(std::abs(constants[p][k] - sign * table[k]), 0.0, 1e-10) << label;
    }
  }
}

TEST(Algebra, SubalgebrasClose) {
  const auto gens = fock::build_generators(8);
  const auto keep = gens.safe_indices();
  auto bracket = [&](Label a, Label b) {
    const auto& x = gens[a].matrix;
    const auto& y = gens[b].matrix;
    return alg::restrict_to(x * y - y * x, keep);
  };
  auto block = [&](Label l) { return alg::restrict_to(gens[l].matrix, keep); };
  // SU(2): {J1, J2, J3}
  EXPECT_LE((bracket(Label::J1, Label::J2) - alg::kI * block(Label::J3)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((bracket(Label::J2, Label::J3) - alg::kI * block(Label::J1)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((bracket(Label::J3, Label::J1) - alg::kI * block(Label::J2)).cwiseAbs().maxCoeff(), 1e-12);
  // SU(1,1): {K3, Q3, S0}
  EXPECT_LE((bracket(Label::K3, Label::Q3) + alg::kI * block(Label::S0)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((bracket(Label::Q3, Label::S0) - alg::kI * block(Label::K3)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((bracket(Label::S0, Label::K3) - alg::kI * block(Label::Q3)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Squeeze, VacuumAtZeroRapidity) {
  const auto state = fock::squeeze_vacuum(lcho::Rapidity(0.0), 10);
  EXPECT_EQ((state - basis_state(0, 0, 10)).norm(), 0.0);
}

TEST(Squeeze, FirstExcitedComponent) {
  const auto state = fock::squeeze_vacuum(lcho::Rapidity(0.5), 30);
  const cplx c = state(fock::basis_index(1, 1, 30));
  EXPECT_NEAR(c.real(), std::tanh(0.5) / std::cosh(0.5), 1e-12);
  EXPECT_NEAR(c.real(), 0.40981, 1e-5);
  EXPECT_NEAR(c.imag(), 0.0, 1e-14);
}

TEST(Squeeze, MatchesCovariantExpansion) {
  for (double eta : {0.25, 0.5, 1.0, -0.6}) {
    const int n = 40;
    const auto state = fock::squeeze_vacuum(lcho::Rapidity(eta), n);
    const auto diag = fock::diagonal_components(state, n);
    const auto coeffs = lcho::oscillator::expansion_coefficients(lcho::Rapidity(eta), n);
    for (int k = 0; k <= 15; ++k) EXPECT_NEAR(std::abs(diag[k] - coeffs[k]), 0.0, 1e-8) << eta << " " << k;
    EXPECT_LE(fock::off_diagonal_magnitude(state, n), 1e-15);
    EXPECT_NEAR(state.norm(), 1.0, 1e-12);
  }
}

TEST(Squeeze, TruncationGuard) {
  EXPECT_THROW(fock::squeeze_vacuum(lcho::Rapidity(1.5), 40), lcho::truncation_error);
  EXPECT_NO_THROW(fock::squeeze_vacuum(lcho::Rapidity(1.5), 100));
}
