#include "cisupport/analyzer.hpp"

#include <algorithm>

#include "cisupport/errors.hpp"
#include "cisupport/rng.hpp"

namespace cisupport {

Analyzer::Analyzer(CIPtr ring, AnalyzerConfig cfg)
    : ring_(std::move(ring)), cfg_(cfg) {
  window_ = cfg_.window > 0 ? cfg_.window : 2 * ring_->codim() + 10;
  if (window_ < 2 * ring_->codim() + 2)
    throw Error(ErrorCode::WindowTooShort,
                "window must be at least 2c + 2 = " +
                    std::to_string(2 * ring_->codim() + 2));
}

std::string Analyzer::fingerprint(const ModulePresentation& M) {
  std::string s = "tw:";
  for (int t : M.gen_twists()) s += std::to_string(t) + ",";
  s += ";ct:";
  for (int t : M.pres.source().twists) s += std::to_string(t) + ",";
  s += ";e:";
  for (int r = 0; r < M.pres.rows(); ++r)
    for (int c = 0; c < M.pres.cols(); ++c)
      s += M.pres.entry(r, c).to_string() + "|";
  return s;
}

const Resolution& Analyzer::resolution(const ModulePresentation& M) {
  std::string key = fingerprint(M);
  auto it = res_cache_.find(key);
  if (it != res_cache_.end()) return it->second;
  Resolution res = resolve(M, window_);
  return res_cache_.emplace(key, std::move(res)).first->second;
}

const OperatorDecomposition& Analyzer::decomposition(const ModulePresentation& M) {
  std::string key = fingerprint(M);
  auto it = dec_cache_.find(key);
  if (it != dec_cache_.end()) return it->second;
  OperatorDecomposition dec = square_decompose(lift(resolution(M)), resolution(M));
  return dec_cache_.emplace(key, std::move(dec)).first->second;
}

const EisenbudAction& Analyzer::action(const ModulePresentation& M) {
  std::string key = fingerprint(M);
  auto it = act_cache_.find(key);
  if (it != act_cache_.end()) return it->second;
  EisenbudAction act = action_on_ext(decomposition(M), resolution(M));
  return act_cache_.emplace(key, std::move(act)).first->second;
}

const SupportIdealResult& Analyzer::support(const ModulePresentation& M) {
  std::string key = fingerprint(M);
  auto it = supp_cache_.find(key);
  if (it != supp_cache_.end()) return it->second;
  SupportIdealResult s = support_ideal(action(M), *ring_);
  return supp_cache_.emplace(key, std::move(s)).first->second;
}

const ExtWindow& Analyzer::ext(const ModulePresentation& M,
                               const ModulePresentation& N) {
  std::string key = fingerprint(M) + "##" + fingerprint(N);
  auto it = ext_cache_.find(key);
  if (it != ext_cache_.end()) return it->second;
  ExtWindow w = ext_pair(resolution(M), decomposition(M), N);
  return ext_cache_.emplace(key, std::move(w)).first->second;
}

SupportIdealResult Analyzer::pair_support(const ModulePresentation& M,
                                          const ModulePresentation& N) {
  return pair_support_ideal(ext(M, N), *ring_);
}

ComplexityReport Analyzer::complexity(const ModulePresentation& M) {
  const Resolution& res = resolution(M);
  return cisupport::complexity(res.betti(), support(M), ring_->codim(),
                               tail_lo(), window_);
}

HomElement Analyzer::chain_map(const ModulePresentation& M,
                               const OperatorPolynomial& eta) {
  return chain_map_of(eta, resolution(M), decomposition(M));
}

ModulePresentation Analyzer::indicator_module(const RationalPoint& a) {
  int c = ring_->codim();
  ModulePresentation U = mcmify(residue_field(ring_));
  if (c == 1) return U;
  TIdeal pt = point_ideal(ring_->t_ring(), a);
  std::vector<Polynomial> base = pt.gb.gens;  // c-1 independent linear forms
  Rng rng(cfg_.seed ^ 0x1d1ca70ULL);
  for (int attempt = 0; attempt <= cfg_.attempt_budget; ++attempt) {
    std::vector<Polynomial> forms = base;
    if (attempt > 0) {
      // Random invertible recombination of the same span.
      const PrimeField& F = ring_->field();
      std::vector<Polynomial> mixed;
      for (size_t i = 0; i < forms.size(); ++i) {
        Polynomial f = forms[i];
        for (size_t j = 0; j < forms.size(); ++j) {
          if (i == j) continue;
          uint32_t cmix = uint32_t(rng.below(F.p()));
          f = f + forms[j].scaled(cmix);
        }
        mixed.push_back(f);
      }
      forms = mixed;
    }
    ModulePresentation U2 = U;
    bool ok = true;
    for (const Polynomial& ell : forms) {
      TIdeal before = support(U2).ideal;
      HomElement h = chain_map(U2, OperatorPolynomial{ell});
      ModulePresentation cone = mcmify(cone_of_map(h));
      const SupportIdealResult& after = support(cone);
      if (!after.stabilized)
        throw Error(ErrorCode::NotStabilized,
                    "indicator construction needs stabilized supports; "
                    "extend the window");
      // Support-drop check: rad(J_cone) = rad(J_before + (ell)).
      GroebnerBasis expected = ideal_sum(before.gb, {ell});
      if (!radical_equal(after.ideal.gb, expected)) {
        ok = false;
        break;
      }
      U2 = cone;
    }
    if (!ok) continue;
    // Postcondition: support is exactly the point.
    if (radical_equal(support(U2).ideal.gb, pt.gb)) return U2;
  }
  throw Error(ErrorCode::ConstructionDegenerate,
              "indicator construction failed the support-drop check");
}

std::pair<OperatorPolynomial, ModulePresentation> Analyzer::complexity_reduction(
    const ModulePresentation& M) {
  int c = ring_->codim();
  int cx = complexity(M).cx;
  if (cx < 2)
    throw Error(ErrorCode::Internal,
                "complexity_reduction needs cx >= 2, got " + std::to_string(cx));
  RingPtr t = ring_->t_ring();
  const PrimeField& F = ring_->field();
  Rng rng(cfg_.seed ^ 0xc0ffeeULL);
  for (int attempt = 0; attempt < cfg_.attempt_budget; ++attempt) {
    Polynomial theta = Polynomial::zero(t);
    if (attempt < c) {
      theta = Polynomial::variable(t, attempt);
    } else {
      std::vector<Term> ts;
      for (int j = 0; j < c; ++j) {
        uint32_t coeff = uint32_t(rng.below(F.p()));
        if (coeff) ts.push_back({Monomial::variable(j), coeff});
      }
      theta = Polynomial::from_terms(t, ts);
      if (theta.is_zero()) continue;
    }
    HomElement h = chain_map(M, OperatorPolynomial{theta});
    ModulePresentation K = mcmify(cone_of_map(h));
    try {
      if (complexity(K).cx == cx - 1) return {OperatorPolynomial{theta}, K};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MethodMismatch) throw;
      // window too small to certify this candidate; try the next one
    }
  }
  throw Error(ErrorCode::SearchExhausted,
              "no linear form dropped the complexity within the budget");
}

}  // namespace cisupport
