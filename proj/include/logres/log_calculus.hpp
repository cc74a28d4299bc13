#pragma once

#include <optional>
#include <vector>

#include "logres/chart.hpp"

namespace logres {

struct MarkedIdeal {
  std::vector<Polynomial> ideal;
  long long mark = 1;
};

// Center (ordinary coordinates) + N^{1/d}.
struct KummerCenter {
  std::vector<int> ordinary;
  MonoidIdeal monomial;
  int root = 1;
};

// Least a with D^{<=a}(I) = (1); nullopt when the derivation chain stabilizes first.
std::optional<int> max_logord(const Chart& C, const std::vector<Polynomial>& I);
std::vector<Polynomial> cosupport(const Chart& C, const MarkedIdeal& M);

// Monoid elements of M(I), minimal. The unit ideal is {0}.
MonoidIdeal monomial_saturation(const Chart& C, const std::vector<Polynomial>& I);

struct CleanPart {
  IVec monomial;  // generator of M(I)
  std::vector<Polynomial> clean;
};
// Throws NotBalanced if M(I) is not principal.
CleanPart clean_part(const Chart& C, const std::vector<Polynomial>& I);

// Canonical product and power on the chart.
std::vector<Polynomial> chart_product(const Chart& C, const std::vector<Polynomial>& A,
                                      const std::vector<Polynomial>& B);
std::vector<Polynomial> chart_power(const Chart& C, const std::vector<Polynomial>& A, long long n);

MarkedIdeal homogenize(const Chart& C, const MarkedIdeal& M);
MarkedIdeal coefficient_ideal(const Chart& C, const MarkedIdeal& M);
// Coefficient ideal with every derivative ideal restricted to var = 0 before taking powers.
MarkedIdeal restricted_coefficient_ideal(const Chart& C, const MarkedIdeal& M, int var);

MarkedIdeal marked_sum(const Chart& C, const std::vector<MarkedIdeal>& parts);
MarkedIdeal marked_product(const Chart& C, const std::vector<MarkedIdeal>& parts);

struct CenterClosure {
  CoverPullback cover;  // chart on which N^{1/d} is integral, with the pullback of I
  std::vector<Polynomial> ideal;
};
// (J^a)^nor = sum_j (N^{j/d})^sat (ordinary)^{a-j} on the refined chart.
CenterClosure integral_closure_of_center_power(const Chart& C, const KummerCenter& J, long long a,
                                               const std::vector<Polynomial>& I = {});
bool is_admissible(const Chart& C, const MarkedIdeal& M, const KummerCenter& J);

struct MaximalContact {
  int var = -1;
  Polynomial shift;                 // new coordinate is x + shift
  std::vector<Polynomial> images;  // substitution x -> x - shift
};
// First generator of D^{<=a-1}(I) of the form c*x + h with h free of the ordinary x.
MaximalContact select_maximal_contact(const Chart& C, const MarkedIdeal& M);

}  // namespace logres
