#pragma once

#include <optional>
#include <string>

#include "cisupport/ci.hpp"

namespace cisupport {

// Declarative session language:
//   field 32003;
//   ring Q[x,y];
//   ci (x^2, y^2);
//   module M = coker [[x]];
//   module N = indicator((1:0));
//   set X = V(t2);
//   support M mod X;
//   audit gar M mod X;
// Statements are ';'-terminated; polynomials are infix with '^' powers and
// '*' products; matrices are bracketed rows; t-polynomials use t1..tc.

struct MatrixLit {
  std::vector<std::vector<Polynomial>> rows;
};

struct ModuleExpr {
  enum class Kind { Coker, K, Free, Sum, Twist, Dual, Syzygy, Cosyzygy, Indicator, Random };
  Kind kind = Kind::K;
  MatrixLit mat;                  // Coker
  std::vector<std::string> refs;  // named module arguments
  std::vector<int64_t> ints;      // Free rank / Twist amount / Syzygy index / Random shape
  std::vector<int64_t> point;     // Indicator coordinates
};

struct SetExpr {
  enum class Kind { V, Empty, All };
  Kind kind = Kind::Empty;
  std::vector<Polynomial> gens;  // over the t-ring
};

struct Command {
  std::string verb;  // betti resolve support pairsupport complexity dimension
                     // isfree ext topv vi reduce audit
  std::string sub;   // audit kind: gar murthy symmetry hw
  std::vector<std::string> names;
  std::vector<int64_t> ints;
  enum class Ctx { None, Mod, CxLe } ctx = Ctx::None;
  std::string ctx_name;
  int64_t ctx_cut = 0;
  std::vector<std::string> split_names;  // optional splitting certificate
};

struct Stmt {
  enum class Kind { Field, Ring, Ci, Module, Set, Cmd };
  Kind kind = Kind::Cmd;
  uint32_t p = 0;                 // Field
  std::string name;               // Ring / Module / Set
  std::vector<std::string> vars;  // Ring
  std::vector<Polynomial> polys;  // Ci
  ModuleExpr mexpr;
  SetExpr sexpr;
  Command cmd;
};

struct SessionScript {
  std::vector<Stmt> stmts;
  uint32_t p = 32003;
  RingPtr qring;  // set once the ring statement is parsed
  CIPtr ciring;   // set once the ci statement is parsed
  std::vector<std::string> module_names;
  std::vector<std::string> set_names;
};

// Total: returns a value or throws ParseError / Error(NameError). Name
// resolution happens during the parse, so undeclared or duplicate names are
// rejected with positions. `p_override` substitutes the field characteristic
// before any polynomial is read.
SessionScript parse_script(const std::string& text,
                           std::optional<uint32_t> p_override = std::nullopt);

// Canonical text form; parse(print(s)) reproduces s on the AST image.
std::string print_script(const SessionScript& s);

// Standalone polynomial parser over a fixed ring (used by tests and tools).
Polynomial parse_polynomial_text(const RingPtr& ring, const std::string& text);

}  // namespace cisupport
