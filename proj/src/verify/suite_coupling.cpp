#include "dharm/oracles.hpp"
#include "suites.hpp"

namespace dharm::verify {

namespace {

std::string label(std::initializer_list<int> j) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const int x : j) {
    os << (first ? "" : " ") << x;
    first = false;
  }
  os << ')';
  return os.str();
}

CheckResult three_j_symmetry(const RunConfig&) {
  constexpr int kMax = 6;
  oracles::ExactThreeJTable table;
  Worst mismatches;
  std::size_t count = 0;
  for (int j1 = 0; j1 <= kMax; ++j1)
    for (int j2 = 0; j2 <= kMax; ++j2)
      for (int j3 = 0; j3 <= kMax; ++j3) {
        if (!triangle(j1, j2, j3)) continue;
        const bool odd = (j1 + j2 + j3) % 2;
        for (int m1 = -j1; m1 <= j1; ++m1)
          for (int m2 = -j2; m2 <= j2; ++m2) {
            const int m3 = -m1 - m2;
            if (std::abs(m3) > j3) continue;
            const RadicalRational base = table.value(j1, j2, j3, m1, m2, m3);
            const RadicalRational odd_image = odd ? -base : base;
            const bool ok = table.value(j2, j3, j1, m2, m3, m1) == base && table.value(j3, j1, j2, m3, m1, m2) == base &&
                            table.value(j2, j1, j3, m2, m1, m3) == odd_image &&
                            table.value(j1, j3, j2, m1, m3, m2) == odd_image &&
                            table.value(j3, j2, j1, m3, m2, m1) == odd_image &&
                            table.value(j1, j2, j3, -m1, -m2, -m3) == odd_image;
            ++count;
            if (!ok) {
              mismatches.error += 1.0;
              if (mismatches.where.empty()) mismatches.where = label({j1, j2, j3, m1, m2, m3});
            }
          }
      }
  mismatches.cases = count;
  return make_result("", 1, mismatches, 0.0, "column permutations and m -> -m phases, exact, j <= 6");
}

CheckResult three_j_orthogonality(const RunConfig&) {
  constexpr int kMax = 6;
  oracles::ExactThreeJTable table;
  Worst mismatches;
  std::size_t count = 0;
  auto fail = [&](const std::string& at) {
    mismatches.error += 1.0;
    if (mismatches.where.empty()) mismatches.where = at;
  };
  // sum_{m1 m2} (2 j3 + 1) (j1 j2 j3; m1 m2 m3)(j1 j2 j3'; m1 m2 m3) = delta_{j3 j3'}
  for (int j1 = 0; j1 <= kMax; ++j1)
    for (int j2 = 0; j2 <= kMax; ++j2)
      for (int j3 = 0; j3 <= kMax; ++j3)
        for (int j3p = 0; j3p <= kMax; ++j3p) {
          if (!triangle(j1, j2, j3) || !triangle(j1, j2, j3p)) continue;
          for (int m3 = -std::min(j3, j3p); m3 <= std::min(j3, j3p); ++m3) {
            oracles::RadicalSum sum;
            for (int m1 = -j1; m1 <= j1; ++m1) {
              const int m2 = -m1 - m3;
              if (std::abs(m2) > j2) continue;
              const auto s = oracles::multiply(table.split(j1, j2, j3, m1, m2, m3), table.split(j1, j2, j3p, m1, m2, m3));
              sum.add(s.coefficient * (2 * j3 + 1), s.kernel);
            }
            ++count;
            if (!sum.equals(RadicalRational::integer(j3 == j3p ? 1 : 0))) fail(label({j1, j2, j3, j3p, m3}));
          }
        }
  // sum_{j3 m3} (2 j3 + 1) (j1 j2 j3; m1 m2 m3)(j1 j2 j3; m1' m2' m3) = delta_{m1 m1'} delta_{m2 m2'}
  for (int j1 = 0; j1 <= kMax; ++j1)
    for (int j2 = 0; j1 + j2 <= kMax; ++j2)
      for (int m1 = -j1; m1 <= j1; ++m1)
        for (int m2 = -j2; m2 <= j2; ++m2)
          for (int m1p = -j1; m1p <= j1; ++m1p) {
            const int m2p = m1 + m2 - m1p;
            if (std::abs(m2p) > j2) continue;
            oracles::RadicalSum sum;
            for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; ++j3) {
              const int m3 = -m1 - m2;
              if (std::abs(m3) > j3) continue;
              const auto s = oracles::multiply(table.split(j1, j2, j3, m1, m2, m3), table.split(j1, j2, j3, m1p, m2p, m3));
              sum.add(s.coefficient * (2 * j3 + 1), s.kernel);
            }
            ++count;
            if (!sum.equals(RadicalRational::integer(m1 == m1p ? 1 : 0))) fail(label({j1, j2, m1, m2, m1p, m2p}));
          }
  mismatches.cases = count;
  return make_result("", 1, mismatches, 0.0, "both orthogonality sums, exact radical arithmetic, j <= 6");
}

CheckResult six_j_contraction(const RunConfig&) {
  constexpr int kMax = 4;
  oracles::ExactThreeJTable table;
  Worst mismatches;
  std::size_t count = 0;
  for (int j1 = 0; j1 <= kMax; ++j1)
    for (int j2 = 0; j2 <= kMax; ++j2)
      for (int j3 = 0; j3 <= kMax; ++j3)
        for (int j4 = 0; j4 <= kMax; ++j4)
          for (int j5 = 0; j5 <= kMax; ++j5)
            for (int j6 = 0; j6 <= kMax; ++j6) {
              const SixJArgs args{j1, j2, j3, j4, j5, j6};
              const RadicalRational closed = six_j(args);
              const bool admissible =
                  triangle(j1, j2, j3) && triangle(j1, j5, j6) && triangle(j4, j2, j6) && triangle(j4, j5, j3);
              bool ok;
              if (admissible) {
                auto sum = oracles::six_j_by_contraction(args, table);
                ok = sum.equals(closed);
              } else {
                ok = closed.is_zero();
              }
              ++count;
              if (!ok) {
                mismatches.error += 1.0;
                if (mismatches.where.empty()) mismatches.where = label({j1, j2, j3, j4, j5, j6});
              }
            }
  mismatches.cases = count;
  return make_result("", 1, mismatches, 0.0, "Racah closed form vs four-3j contraction, exact, j <= 4");
}

CheckResult double_tables(const RunConfig&) {
  // The cached double tables must round the exact symbols.
  Worst w;
  for (int j1 = 0; j1 <= 4; ++j1)
    for (int j2 = 0; j2 <= 4; ++j2)
      for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; ++j3)
        for (int m1 = -j1; m1 <= j1; ++m1)
          for (int m2 = -j2; m2 <= j2; ++m2) {
            const int m3 = -m1 - m2;
            if (std::abs(m3) > j3) continue;
            const double exact = three_j({j1, j2, j3, m1, m2, m3}).to_double();
            w.update(std::abs(three_j_value(j1, j2, j3, m1, m2, m3) - exact), label({j1, j2, j3, m1, m2, m3}));
            const double cg = clebsch_gordan(j1, m1, j2, m2, j3, -m3).to_double();
            w.update(std::abs(clebsch_gordan_value(j1, m1, j2, m2, j3, -m3) - cg), label({j1, m1, j2, m2, j3, -m3}));
          }
  return make_result("", 0, w, 1e-15, "double tables vs exact symbols, j <= 4");
}

}  // namespace

std::vector<Check> coupling_checks() {
  return {
      {"coupling.c01.three_j_symmetry", 1, three_j_symmetry},
      {"coupling.c01.three_j_orthogonality", 1, three_j_orthogonality},
      {"coupling.c01.six_j_contraction", 1, six_j_contraction},
      {"coupling.tables", 0, double_tables},
  };
}

}  // namespace dharm::verify
