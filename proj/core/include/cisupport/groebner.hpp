#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "cisupport/freemod.hpp"

namespace cisupport {

// Global cap on working-set size (total stored terms) for Buchberger runs.
// 0 means unlimited. Exceeding it raises BudgetExceeded.
void set_term_budget(size_t terms);
size_t term_budget();

// Buchberger for submodules of R^rank over a polynomial ring R, with optional
// representation tracking. Tracking records, for every basis element, its
// expression in the original generators; with tracking on, every same-position
// S-pair is processed and its standard representation kept, which is exactly
// what Schreyer's construction needs to emit syzygies.
class GroebnerEngine {
 public:
  GroebnerEngine(RingPtr ring, int rank, bool track);

  int rank() const { return rank_; }
  size_t generator_count() const { return n_gens_; }

  // Queues a generator (zero vectors are remembered but not added).
  void add_generator(FreeVector v);
  // Processes pending S-pairs until none remain.
  void saturate();

  // Remainder of v on division by the current basis. With `rep` non-null and
  // tracking on, also accumulates the combination of original generators
  // subtracted from v (so v = rep·gens + returned remainder).
  FreeVector reduce(FreeVector v, FreeVector* rep = nullptr) const;

  bool member(const FreeVector& v) const { return reduce(v).is_zero(); }

  // Coefficients c with v = sum c_i * gens_i, if v lies in the submodule.
  std::optional<std::vector<Polynomial>> express(const FreeVector& v) const;

  // Generators of { c in R^n : sum c_i gens_i = 0 } (n = generator count).
  // Requires tracking.
  std::vector<FreeVector> syzygies() const;

  // Minimal, fully inter-reduced, monic basis (canonical for the order).
  std::vector<FreeVector> reduced_basis() const;

  const std::vector<FreeVector>& raw_basis() const { return basis_; }

 private:
  struct Pair {
    int i, j;
    Monomial lcm;
  };

  void push_basis(FreeVector v, FreeVector rep);
  void make_pairs(int idx);
  bool chain_skip(const Pair& p) const;
  size_t stored_terms() const;

  RingPtr ring_;
  int rank_;
  bool track_;
  size_t n_gens_ = 0;

  std::vector<FreeVector> basis_;
  std::vector<FreeVector::Lead> leads_;
  std::vector<FreeVector> reps_;          // basis element -> combo of gens
  std::vector<FreeVector> syz_;           // syzygies of gens, built on the fly
  std::vector<std::vector<int>> by_pos_;  // lead position -> basis indices

  std::vector<Pair> queue_;
  std::set<std::pair<int, int>> done_;
};

// --- ring-level (rank one) convenience API ---

struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> gens;  // reduced, monic, sorted by descending lead
  bool reduced = true;

  bool contains_one() const {
    return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero();
  }
};

GroebnerBasis groebner(const std::vector<Polynomial>& gens);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
// S-polynomial of two polynomials (same ring); used by invariant tests.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

std::optional<std::vector<Polynomial>> membership_with_coefficients(
    const Polynomial& f, const std::vector<Polynomial>& gens);

std::vector<std::vector<Polynomial>> syzygies(
    const std::vector<Polynomial>& gens);

// --- module-level API over the plain polynomial ring ---

struct ModuleGB {
  RingPtr ring;
  int rank = 0;
  std::vector<FreeVector> gens;  // reduced
};

ModuleGB module_groebner(RingPtr ring, int rank,
                         const std::vector<FreeVector>& gens);
FreeVector module_normal_form(FreeVector v, const ModuleGB& G);
std::vector<FreeVector> module_syzygies(RingPtr ring, int rank,
                                        const std::vector<FreeVector>& gens);

}  // namespace cisupport
