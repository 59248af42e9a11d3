#pragma once

#include <map>
#include <string>

#include "cisupport/support.hpp"

namespace cisupport {

struct AnalyzerConfig {
  int window = 0;          // resolution window; 0 means 2c + 10
  uint64_t seed = 0;       // drives deterministic searches
  int attempt_budget = 32; // retry budget for searches
};

// Caching driver for the pipeline resolution -> operators -> supports.
// One Analyzer per ring; modules are keyed by their presentation data.
class Analyzer {
 public:
  Analyzer(CIPtr ring, AnalyzerConfig cfg);

  const CIRing& ring() const { return *ring_; }
  const CIPtr& ring_ptr() const { return ring_; }
  int window() const { return window_; }
  int tail_lo() const { return window_ / 2; }
  const AnalyzerConfig& config() const { return cfg_; }

  const Resolution& resolution(const ModulePresentation& M);
  const OperatorDecomposition& decomposition(const ModulePresentation& M);
  const EisenbudAction& action(const ModulePresentation& M);
  const SupportIdealResult& support(const ModulePresentation& M);
  const ExtWindow& ext(const ModulePresentation& M, const ModulePresentation& N);
  SupportIdealResult pair_support(const ModulePresentation& M,
                                  const ModulePresentation& N);
  ComplexityReport complexity(const ModulePresentation& M);

  // Iterated-cone construction of an MCM module supported exactly at `a`.
  ModulePresentation indicator_module(const RationalPoint& a);

  // Lemma-style complexity reduction: a linear form theta and the cone K of
  // its chain map with cx K = cx M - 1. Deterministic coordinate-then-random
  // sweep; SearchExhausted when the attempt budget runs out.
  std::pair<OperatorPolynomial, ModulePresentation> complexity_reduction(
      const ModulePresentation& M);

  // The degree-zero-after-twist chain map attached to eta on M's resolution.
  HomElement chain_map(const ModulePresentation& M, const OperatorPolynomial& eta);

  static std::string fingerprint(const ModulePresentation& M);

 private:
  CIPtr ring_;
  AnalyzerConfig cfg_;
  int window_;
  std::map<std::string, Resolution> res_cache_;
  std::map<std::string, OperatorDecomposition> dec_cache_;
  std::map<std::string, EisenbudAction> act_cache_;
  std::map<std::string, SupportIdealResult> supp_cache_;
  std::map<std::string, ExtWindow> ext_cache_;
};

}  // namespace cisupport
