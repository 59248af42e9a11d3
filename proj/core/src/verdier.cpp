#include "cisupport/verdier.hpp"

#include <algorithm>

#include "cisupport/errors.hpp"

namespace cisupport {

QuotientContext QuotientContext::by_complexity(int i, int codim) {
  if (i < 1 || i > codim - 1)
    throw Error(ErrorCode::Internal,
                "complexity cutoff must satisfy 1 <= i <= c-1");
  return QuotientContext{Kind::ByComplexity, AlgebraicSet{}, i};
}

std::string QuotientContext::label() const {
  if (kind == Kind::ByVariety)
    return "T_X[" + (X.label.empty() ? std::string("X") : X.label) + "]";
  return "T_" + std::to_string(cutoff);
}

const char* verdict_name(AuditReport::Verdict v) {
  switch (v) {
    case AuditReport::Verdict::Pass: return "PASS";
    case AuditReport::Verdict::Fail: return "FAIL";
    case AuditReport::Verdict::Inapplicable: return "INAPPLICABLE";
    case AuditReport::Verdict::WindowLimited: return "WINDOW-LIMITED";
  }
  return "?";
}

namespace {

bool disjoint_from(const TIdeal& J, const AlgebraicSet& X) {
  // V(J) n X empty in projective space.
  TIdeal sum = variety_intersection(J, X.ideal);
  return variety_empty_projective(sum);
}

ModulePresentation shift_module(Analyzer& an, const ModulePresentation& N,
                                int n) {
  if (n == 0) return N;
  if (n > 0) return cosyzygy_module(N, n);
  const Resolution& res = an.resolution(N);
  return syzygy_module(res, -n);
}

// The vanishing pattern of the audited Hom sequence on degrees 1..top.
struct HomScan {
  std::vector<bool> zero;  // index n-1 holds degree n
  bool surrogate = false;
  bool stabilized = true;
  std::string route;
  int top() const { return int(zero.size()); }
};

HomScan scan_homs(Analyzer& an, const ModulePresentation& M,
                  const ModulePresentation& N, const QuotientContext& ctx) {
  HomScan scan;
  const CIRing& A = an.ring();
  if (ctx.kind == QuotientContext::Kind::ByVariety) {
    const SupportIdealResult& sm = an.support(M);
    const SupportIdealResult& sn = an.support(N);
    scan.stabilized = sm.stabilized && sn.stabilized;
    bool m_zero = contains(ctx.X, sm.ideal);
    bool n_zero = contains(ctx.X, sn.ideal);
    const ExtWindow& w = an.ext(M, N);
    if (m_zero || n_zero) {
      scan.route = "zero-object";
      scan.zero.assign(w.dims.size() > 1 ? w.dims.size() - 1 : 0, true);
      return scan;
    }
    if (disjoint_from(sm.ideal, ctx.X) || disjoint_from(sn.ideal, ctx.X)) {
      scan.route = "disjoint-stable-ext";
      for (size_t n = 1; n < w.dims.size(); ++n)
        scan.zero.push_back(w.dims[n] == 0);
      return scan;
    }
    scan.route = "support-in-X-discount";
    scan.surrogate = true;
    for (size_t n = 1; n < w.dims.size(); ++n) {
      bool z = w.dims[n] == 0;
      if (!z) {
        GroebnerBasis ann = slice_ann(A.t_ring(), w.dims, w.maps, int(n));
        z = contains(ctx.X, TIdeal{ann});
      }
      scan.zero.push_back(z);
    }
    return scan;
  }
  // ByComplexity: modules of complexity <= i are zero; a degree is discounted
  // when the submodule its slice generates lives in projective dimension
  // <= i - 1.
  int i = ctx.cutoff;
  int cm = an.complexity(M).cx;
  int cn = an.complexity(N).cx;
  scan.stabilized = an.support(M).stabilized && an.support(N).stabilized;
  const ExtWindow& w = an.ext(M, N);
  if (cm <= i || cn <= i) {
    scan.route = "zero-object";
    scan.zero.assign(w.dims.size() > 1 ? w.dims.size() - 1 : 0, true);
    return scan;
  }
  scan.route = "low-dimension-discount";
  scan.surrogate = true;
  for (size_t n = 1; n < w.dims.size(); ++n) {
    bool z = w.dims[n] == 0;
    if (!z) {
      GroebnerBasis ann = slice_ann(A.t_ring(), w.dims, w.maps, int(n));
      z = std::max(0, krull_dimension(ann)) <= i;
    }
    scan.zero.push_back(z);
  }
  return scan;
}

std::string pattern_string(const HomScan& scan, int lo) {
  std::string s;
  for (int n = lo; n <= scan.top(); ++n)
    s += scan.zero[size_t(n) - 1] ? '0' : '*';
  return s;
}

void push(AuditReport& rep, const std::string& k, const std::string& v) {
  rep.evidence.push_back({k, v});
}

}  // namespace

SplitCheckResult split_check(Analyzer& an, const EssentialSplitting& s) {
  SplitCheckResult out;
  const SupportIdealResult& j1 = an.support(s.m1);
  if (!contains(s.X, j1.ideal)) {
    out.valid = false;
    out.failed_clause = "V*(M1) not inside X";
    return out;
  }
  const SupportIdealResult& j2 = an.support(s.m2);
  if (!disjoint_from(j2.ideal, s.X)) {
    out.valid = false;
    out.failed_clause = "V*(M2) meets X";
    return out;
  }
  if (!is_valid_hom(s.to) || !is_valid_hom(s.from)) {
    out.valid = false;
    out.failed_clause = "certificate maps are not module maps";
    return out;
  }
  HomElement round = hom_compose(s.from, s.to);  // M -> M
  if (!stably_equal(round, identity_hom(s.to.source))) {
    out.valid = false;
    out.failed_clause = "from o to is not the stable identity on M";
    return out;
  }
  HomElement round2 = hom_compose(s.to, s.from);
  if (!stably_equal(round2, identity_hom(s.from.source))) {
    out.valid = false;
    out.failed_clause = "to o from is not the stable identity on M1 + M2";
    return out;
  }
  return out;
}

bool in_thick(Analyzer& an, const ModulePresentation& M,
              const QuotientContext& ctx) {
  if (ctx.kind == QuotientContext::Kind::ByVariety) {
    const SupportIdealResult& s = an.support(M);
    if (!s.stabilized)
      throw Error(ErrorCode::NotStabilized, "support ideal not stabilized");
    return contains(ctx.X, s.ideal);
  }
  return an.complexity(M).cx <= ctx.cutoff;
}

QuotientHomResult quotient_hom(Analyzer& an, const ModulePresentation& M,
                               const ModulePresentation& N, int n,
                               const QuotientContext& ctx,
                               const std::optional<EssentialSplitting>& split) {
  if (ctx.kind != QuotientContext::Kind::ByVariety)
    throw Error(ErrorCode::Internal, "quotient_hom is defined for T_X contexts");
  const AlgebraicSet& X = ctx.X;
  QuotientHomResult out;

  ModulePresentation left = M;
  ModulePresentation right = N;
  std::string route;
  if (split) {
    SplitCheckResult chk = split_check(an, *split);
    if (!chk.valid)
      throw Error(ErrorCode::InvalidSplitting, chk.failed_clause);
    std::string sf = Analyzer::fingerprint(split->to.source);
    if (sf == Analyzer::fingerprint(M)) {
      left = split->m2;
      route = "splitting-on-left;";
    } else if (sf == Analyzer::fingerprint(N)) {
      right = split->m2;
      route = "splitting-on-right;";
    } else {
      throw Error(ErrorCode::InvalidSplitting,
                  "certificate does not match either argument");
    }
  }

  const SupportIdealResult& sl = an.support(left);
  const SupportIdealResult& sr = an.support(right);
  if (contains(X, sl.ideal) || contains(X, sr.ideal)) {
    out.computable = true;
    out.route = route + "zero-object";
    return out;
  }
  if (disjoint_from(sl.ideal, X) || disjoint_from(sr.ideal, X)) {
    out.computable = true;
    out.route = route + "stable-hom-isomorphism";
    ModulePresentation shifted = shift_module(an, right, n);
    auto [lo, hi] = hom_degree_range(left, shifted);
    for (int e = lo; e <= hi; ++e) {
      StableHomResult sh = stable_hom(left, shifted, e);
      out.dim += sh.dim;
      for (HomElement& h : sh.reps) out.reps.push_back(std::move(h));
    }
    return out;
  }
  out.computable = false;
  out.route = "outside the computable regime";
  return out;
}

int ecx_upper(Analyzer& an, const ModulePresentation& M,
              const QuotientContext& ctx,
              const std::vector<ModulePresentation>& alternates) {
  if (is_free(M)) return 0;
  int best = an.complexity(M).cx;
  for (const ModulePresentation& L : alternates) {
    // Necessary condition for L = M in the quotient: matching quotient
    // support. Certificates beyond that are the caller's responsibility.
    bool plausible = false;
    if (ctx.kind == QuotientContext::Kind::ByVariety) {
      TIdeal jm = variety_union(an.support(M).ideal, ctx.X.ideal);
      TIdeal jl = variety_union(an.support(L).ideal, ctx.X.ideal);
      plausible = radical_equal(jm.gb, jl.gb);
    } else {
      int cm = an.complexity(M).cx, cl = an.complexity(L).cx;
      if (cm <= ctx.cutoff && cl <= ctx.cutoff) {
        plausible = true;
      } else if (cm > ctx.cutoff && cl > ctx.cutoff) {
        TopvResult tm = topv(an.support(M).ideal);
        TopvResult tl = topv(an.support(L).ideal);
        plausible = radical_equal(tm.ideal.gb, tl.ideal.gb);
      }
    }
    if (plausible) best = std::min(best, an.complexity(L).cx);
  }
  return best;
}

AuditReport audit_gar(Analyzer& an, const ModulePresentation& M,
                      const QuotientContext& ctx) {
  AuditReport rep;
  rep.theorem = ctx.kind == QuotientContext::Kind::ByVariety ? "gar-T_X" : "gar-T_i";
  rep.inputs = ctx.label();
  rep.window = an.window();
  int tail_lo = std::max(1, an.tail_lo());

  // Zero-object test tolerant of provisional supports: an unstabilized
  // ideal downgrades the verdict to WINDOW-LIMITED instead of erroring.
  bool side_a;
  bool side_a_stable = true;
  if (ctx.kind == QuotientContext::Kind::ByVariety) {
    const SupportIdealResult& s = an.support(M);
    side_a = contains(ctx.X, s.ideal);
    side_a_stable = s.stabilized;
  } else {
    side_a = an.complexity(M).cx <= ctx.cutoff;
    side_a_stable = an.support(M).stabilized;
  }
  HomScan scan = scan_homs(an, M, M, ctx);
  scan.stabilized = scan.stabilized && side_a_stable;
  bool side_b = true;
  int witness = -1;
  for (int n = tail_lo; n <= scan.top(); ++n)
    if (!scan.zero[size_t(n) - 1]) {
      side_b = false;
      if (witness < 0) witness = n;
    }
  push(rep, "zero-object", side_a ? "true" : "false");
  push(rep, "self-hom-tail-vanishes", side_b ? "true" : "false");
  push(rep, "route", scan.route);
  push(rep, "tail-pattern", pattern_string(scan, tail_lo));
  if (witness >= 0) push(rep, "first-nonvanishing", std::to_string(witness));
  if (scan.surrogate) rep.flags.push_back("surrogate-evidence");
  if (side_a == side_b) {
    rep.verdict = scan.stabilized ? AuditReport::Verdict::Pass
                                  : AuditReport::Verdict::WindowLimited;
  } else {
    rep.verdict = AuditReport::Verdict::Fail;
  }
  return rep;
}

AuditReport audit_murthy(Analyzer& an, const ModulePresentation& M,
                         const ModulePresentation& N, const QuotientContext& ctx,
                         int m_start) {
  AuditReport rep;
  rep.theorem = ctx.kind == QuotientContext::Kind::ByVariety ? "murthy-T_X" : "murthy-T_i";
  rep.inputs = ctx.label();
  rep.window = an.window();

  int run_len;
  if (ctx.kind == QuotientContext::Kind::ByVariety) {
    int r = ecx_upper(an, N, ctx);
    run_len = r + 1;
    push(rep, "ecx-upper", std::to_string(r));
  } else {
    run_len = an.ring().codim() - ctx.cutoff + 1;
  }
  push(rep, "run-length", std::to_string(run_len));

  HomScan scan = scan_homs(an, M, N, ctx);
  push(rep, "route", scan.route);
  push(rep, "pattern", pattern_string(scan, std::max(1, m_start)));
  if (scan.surrogate) rep.flags.push_back("surrogate-evidence");

  int start = -1;
  for (int n = std::max(1, m_start); n + run_len - 1 <= scan.top(); ++n) {
    bool run = true;
    for (int j = 0; j < run_len; ++j)
      if (!scan.zero[size_t(n + j) - 1]) run = false;
    if (run) {
      start = n;
      break;
    }
  }
  if (start < 0) {
    rep.flags.push_back("hypothesis-never-fires");
    rep.verdict = scan.stabilized ? AuditReport::Verdict::Pass
                                  : AuditReport::Verdict::WindowLimited;
    return rep;
  }
  push(rep, "run-start", std::to_string(start));
  for (int n = start; n <= scan.top(); ++n) {
    if (!scan.zero[size_t(n) - 1]) {
      push(rep, "violating-degree", std::to_string(n));
      rep.verdict = AuditReport::Verdict::Fail;
      return rep;
    }
  }
  rep.flags.push_back("tail-window-verified");
  rep.verdict = scan.stabilized ? AuditReport::Verdict::Pass
                                : AuditReport::Verdict::WindowLimited;
  return rep;
}

AuditReport audit_symmetry(Analyzer& an, const ModulePresentation& M,
                           const ModulePresentation& N, const AlgebraicSet& X,
                           const std::optional<EssentialSplitting>& split) {
  AuditReport rep;
  rep.theorem = "symmetry-T_X";
  rep.inputs = "T_X[" + (X.label.empty() ? std::string("X") : X.label) + "]";
  rep.window = an.window();
  QuotientContext ctx = QuotientContext::by_variety(X);
  int tail_lo = std::max(1, an.tail_lo());

  const SupportIdealResult& sm = an.support(M);
  const SupportIdealResult& sn = an.support(N);
  bool stabilized = sm.stabilized && sn.stabilized;
  bool disjoint_mod_X = empty_intersection_mod_X(sm.ideal, sn.ideal, X);
  push(rep, "V_X-intersection-empty", disjoint_mod_X ? "true" : "false");

  // (1) => (2): tail vanishing forces empty intersection mod X.
  HomScan scan = scan_homs(an, M, N, ctx);
  bool tail_vanishes = true;
  for (int n = tail_lo; n <= scan.top(); ++n)
    if (!scan.zero[size_t(n) - 1]) tail_vanishes = false;
  push(rep, "tail-vanishes", tail_vanishes ? "true" : "false");
  push(rep, "route", scan.route);
  bool fail = false;
  if (tail_vanishes) {
    if (!disjoint_mod_X) {
      push(rep, "violation", "(1) holds on the window but (2) fails");
      fail = true;
    }
  } else {
    rep.flags.push_back("(1)=>(2)-vacuous");
  }

  // (2) => (1): only along an essential-disjointness route.
  if (disjoint_mod_X && !fail) {
    std::optional<std::string> cert_route;
    if (split) {
      SplitCheckResult chk = split_check(an, *split);
      if (!chk.valid) throw Error(ErrorCode::InvalidSplitting, chk.failed_clause);
      cert_route = "certified-splitting";
    } else if (contains(X, sm.ideal) || disjoint_from(sm.ideal, X) ||
               contains(X, sn.ideal) || disjoint_from(sn.ideal, X)) {
      cert_route = "trivial-splitting";
    }
    if (cert_route) {
      push(rep, "(2)=>(1)-route", *cert_route);
      bool all_zero = true;
      int bad = 0;
      for (int n = 1; n <= scan.top(); ++n)
        if (!scan.zero[size_t(n) - 1]) {
          all_zero = false;
          bad = n;
          break;
        }
      // Degrees 0 and slightly negative, through explicit quotient Homs.
      for (int n = -2; n <= 0 && all_zero; ++n) {
        QuotientHomResult qh = quotient_hom(an, M, N, n, ctx, split);
        if (qh.computable && qh.dim != 0) {
          all_zero = false;
          bad = n;
        }
      }
      if (!all_zero) {
        push(rep, "violation", "(2) holds but Hom at degree " +
                                   std::to_string(bad) + " is nonzero");
        fail = true;
      }
    } else {
      rep.flags.push_back("conjecture-evidence");
      push(rep, "conjecture-observed-tail", pattern_string(scan, tail_lo));
    }
  }

  if (fail)
    rep.verdict = AuditReport::Verdict::Fail;
  else
    rep.verdict = stabilized ? AuditReport::Verdict::Pass
                             : AuditReport::Verdict::WindowLimited;
  return rep;
}

AuditReport audit_hw(Analyzer& an, const ModulePresentation& U,
                     const ModulePresentation& V) {
  AuditReport rep;
  int c = an.ring().codim();
  rep.theorem = "huneke-wiegand-T_{c-1}";
  rep.inputs = "T_" + std::to_string(c - 1);
  rep.window = an.window();
  if (c < 2) {
    rep.verdict = AuditReport::Verdict::Inapplicable;
    rep.flags.push_back("needs c >= 2");
    return rep;
  }
  int cu = an.complexity(U).cx;
  int cv = an.complexity(V).cx;
  push(rep, "cx-U", std::to_string(cu));
  push(rep, "cx-V", std::to_string(cv));
  if (cu < c || cv < c) {
    rep.verdict = AuditReport::Verdict::Inapplicable;
    rep.flags.push_back("an argument is zero in T_{c-1}");
    return rep;
  }
  const ExtWindow& w = an.ext(U, V);
  int tail_lo = std::max(1, an.tail_lo());
  std::string pat;
  for (int n = tail_lo; n < int(w.dims.size()); ++n)
    pat += w.dims[size_t(n)] == 0 ? '0' : '*';
  push(rep, "tail-pattern", pat);
  for (int n = tail_lo; n + 1 < int(w.dims.size()); ++n) {
    if (w.dims[size_t(n)] == 0 && w.dims[size_t(n) + 1] == 0) {
      push(rep, "consecutive-vanishing-at", std::to_string(n));
      rep.verdict = AuditReport::Verdict::Fail;
      return rep;
    }
  }
  rep.flags.push_back("tail-window-verified");
  rep.verdict = AuditReport::Verdict::Pass;
  return rep;
}

}  // namespace cisupport
