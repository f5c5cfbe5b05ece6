#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "judicious/digraph.hpp"
#include "judicious/error.hpp"

namespace judicious {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

struct EngineConfig {
  Count d = 4;
  double epsilon = 0.01;
  double threshold_exponent = 0.75;
  std::size_t trials = 64;
  std::uint64_t seed = 1;
  std::size_t exhaustive_x_limit = 24;
  std::size_t local_improve_rounds = 10;
  std::size_t dp_state_limit = 100'000'000;
  /// Extra probabilities run for every candidate besides its own p.
  std::vector<Rational> p_sweep;
  /// Worker threads for trials; results do not depend on this.
  std::size_t threads = 1;
  /// Also run the X-empty, p = 1/2 extension when the degree split is used.
  bool baseline_run = true;

  void validate() const {
    if (d < 1) throw Error(ErrorKind::InvalidConfig, "d must be >= 1");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(ErrorKind::InvalidConfig, "epsilon must lie in (0,1)");
    if (trials < 1) throw Error(ErrorKind::InvalidConfig, "trials must be >= 1");
    if (threads < 1) throw Error(ErrorKind::InvalidConfig, "threads must be >= 1");
    for (const auto& p : p_sweep) {
      if (p < Rational(0) || p > Rational(1, 2)) {
        throw Error(ErrorKind::InvalidConfig, "p_sweep entries must lie in [0, 1/2]");
      }
    }
  }
};

enum class CandidateLabel { MinGap, X1Fwd, X2Sign, X3Sign, X4, X5, SingleHuge, Baseline };

constexpr std::string_view to_string(CandidateLabel l) {
  switch (l) {
    case CandidateLabel::MinGap: return "MINGAP";
    case CandidateLabel::X1Fwd: return "X1FWD";
    case CandidateLabel::X2Sign: return "X2SIGN";
    case CandidateLabel::X3Sign: return "X3SIGN";
    case CandidateLabel::X4: return "X4";
    case CandidateLabel::X5: return "X5";
    case CandidateLabel::SingleHuge: return "SINGLE-HUGE";
    case CandidateLabel::Baseline: return "BASELINE";
  }
  return "?";
}

/// A partition of the high-degree set X plus the probability with which
/// each low-degree vertex is sent to side 1.
struct CandidateXPartition {
  CandidateLabel label = CandidateLabel::MinGap;
  VertexSet x1;
  VertexSet x2;
  Rational p{1, 2};
};

}  // namespace judicious
