#pragma once

#include <optional>

#include "cisupport/analyzer.hpp"

namespace cisupport {

// The quotient category being audited: T_X = CMS/S_X for an algebraic set X,
// or T_i = CMS/CMS_{<=i} for a complexity cutoff 1 <= i <= c-1.
struct QuotientContext {
  enum class Kind { ByVariety, ByComplexity } kind;
  AlgebraicSet X;  // ByVariety
  int cutoff = 0;  // ByComplexity

  static QuotientContext by_variety(AlgebraicSet set) {
    return QuotientContext{Kind::ByVariety, std::move(set), 0};
  }
  static QuotientContext by_complexity(int i, int codim);
  std::string label() const;
};

// User-supplied certificate that M = M1 + M2 with V*(M1) inside X and
// V*(M2) disjoint from X, witnessed by a pair of mutually inverse stable maps.
struct EssentialSplitting {
  ModulePresentation m1, m2;
  HomElement to;    // M -> M1 + M2
  HomElement from;  // M1 + M2 -> M
  AlgebraicSet X;
};

struct SplitCheckResult {
  bool valid = true;
  std::string failed_clause;  // set when invalid
};
SplitCheckResult split_check(Analyzer& an, const EssentialSplitting& s);

// M is zero in the quotient: V*(M) inside X, resp. cx M <= i.
bool in_thick(Analyzer& an, const ModulePresentation& M,
              const QuotientContext& ctx);

struct QuotientHomResult {
  bool computable = false;
  int dim = 0;
  std::vector<HomElement> reps;
  std::string route;  // which reduction made it computable
};

// Hom_{T_X}(M, Omega^{-n} N) in the computable regime: one side disjoint
// from X (the natural map from the stable Hom is an isomorphism), one side
// inside X (zero object), or a certified splitting that reduces to the
// disjoint case. Everything else reports not-computable.
QuotientHomResult quotient_hom(Analyzer& an, const ModulePresentation& M,
                               const ModulePresentation& N, int n,
                               const QuotientContext& ctx,
                               const std::optional<EssentialSplitting>& split =
                                   std::nullopt);

// Upper bound for the minimal complexity in the isomorphism class of M in
// the quotient: min over M and the registered alternates (alternates are
// sanity-checked for matching quotient support and otherwise trusted).
int ecx_upper(Analyzer& an, const ModulePresentation& M,
              const QuotientContext& ctx,
              const std::vector<ModulePresentation>& alternates = {});

struct AuditEvidence {
  std::string key;
  std::string value;
};

struct AuditReport {
  std::string theorem;
  std::string inputs;
  int window = 0;
  enum class Verdict { Pass, Fail, Inapplicable, WindowLimited } verdict;
  std::vector<AuditEvidence> evidence;
  std::vector<std::string> flags;
};

const char* verdict_name(AuditReport::Verdict v);

// GAR: vanishing self-Homs in the quotient force the zero object. Both sides
// are computed and compared; mismatch is a FAIL with a witness.
AuditReport audit_gar(Analyzer& an, const ModulePresentation& M,
                      const QuotientContext& ctx);

// Murthy: a vanishing run of the right length forces vanishing ever after.
// Run length: ecx(N)+1 for T_X (upper bound, sound direction), c-i+1 for T_i.
AuditReport audit_murthy(Analyzer& an, const ModulePresentation& M,
                         const ModulePresentation& N, const QuotientContext& ctx,
                         int m_start = 1);

// Symmetry of vanishing: (1) => (2) always audited; (2) => (1) only along a
// certified essential splitting, otherwise logged as conjecture evidence.
AuditReport audit_symmetry(Analyzer& an, const ModulePresentation& M,
                           const ModulePresentation& N, const AlgebraicSet& X,
                           const std::optional<EssentialSplitting>& split =
                               std::nullopt);

// Huneke-Wiegand surrogate in the 2-periodic quotient T_{c-1}: two nonzero
// objects never have two consecutive vanishing Ext degrees in the tail.
AuditReport audit_hw(Analyzer& an, const ModulePresentation& U,
                     const ModulePresentation& V);

}  // namespace cisupport
