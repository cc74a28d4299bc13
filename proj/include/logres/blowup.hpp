#pragma once

#include <string>
#include <vector>

#include "logres/log_calculus.hpp"

namespace logres {

struct BlowupChart {
  Chart chart;
  Polynomial exceptional;          // m_E
  int generator = 0;               // index into the center generator list
  std::string generator_label;     // e.g. "x" or "u^(1/2)"
  std::vector<Polynomial> images;  // parent variable -> polynomial on this chart
};

struct BlowupResult {
  KummerCenter center;
  std::string parent;
  std::vector<BlowupChart> charts;
};

// Generators of a center as root-space vectors: ordinary coordinates first,
// then the minimal monomial generators divided by the root index.
std::vector<QVec> center_generators(const Chart& C, const KummerCenter& J);
std::string center_to_string(const Chart& C, const KummerCenter& J);

// Charts of the normalized Kummer blowup. Charts whose generator is not a
// vertex of the center are covered by the others and are omitted.
BlowupResult blow_up(const Chart& C, const KummerCenter& J);

// I O' : m_E^a. Throws NotDivisible unless every generator pulls back into (m_E^a).
std::vector<Polynomial> controlled_transform(const BlowupChart& B, const std::vector<Polynomial>& I, long long a);
// Full pullback of an ideal.
std::vector<Polynomial> pullback(const BlowupChart& B, const std::vector<Polynomial>& I);
std::vector<Polynomial> strict_transform(const BlowupChart& B, const std::vector<Polynomial>& I);
KummerCenter pushforward_center(const std::vector<int>& chain, const KummerCenter& J);

}  // namespace logres
