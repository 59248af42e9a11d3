#include "cisupport/script.hpp"

#include <cctype>

#include "cisupport/errors.hpp"

namespace cisupport {

namespace {

struct Token {
  enum Kind { Ident, Int, Punct, End } kind = End;
  std::string text;
  int64_t value = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::End;
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
        ++col_;
      }
      tok_.kind = Token::Ident;
      tok_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++col_;
      }
      tok_.kind = Token::Int;
      tok_.text = text_.substr(start, pos_ - start);
      tok_.value = std::stoll(tok_.text);
      return;
    }
    tok_.kind = Token::Punct;
    tok_.text = std::string(1, c);
    ++pos_;
    ++col_;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

[[noreturn]] void fail(const Token& t, const std::string& expected) {
  throw ParseError(t.line, t.col,
                   "expected " + expected + ", found '" +
                       (t.kind == Token::End ? "<end>" : t.text) + "'");
}

class Parser {
 public:
  Parser(const std::string& text, std::optional<uint32_t> p_override)
      : lex_(text), p_override_(p_override) {}

  SessionScript parse() {
    SessionScript s;
    if (p_override_) s.p = *p_override_;
    while (lex_.peek().kind != Token::End) statement(s);
    return s;
  }

  Polynomial polynomial(const RingPtr& ring) { return expr(ring); }

 private:
  Token expect_punct(const std::string& p) {
    if (lex_.peek().kind != Token::Punct || lex_.peek().text != p)
      fail(lex_.peek(), "'" + p + "'");
    return lex_.take();
  }
  Token expect_ident() {
    if (lex_.peek().kind != Token::Ident) fail(lex_.peek(), "an identifier");
    return lex_.take();
  }
  Token expect_int() {
    if (lex_.peek().kind != Token::Int) fail(lex_.peek(), "an integer");
    return lex_.take();
  }
  bool at_punct(const std::string& p) {
    return lex_.peek().kind == Token::Punct && lex_.peek().text == p;
  }
  bool at_ident(const std::string& w) {
    return lex_.peek().kind == Token::Ident && lex_.peek().text == w;
  }
  int64_t signed_int() {
    bool neg = false;
    if (at_punct("-")) {
      lex_.take();
      neg = true;
    }
    Token t = expect_int();
    return neg ? -t.value : t.value;
  }

  // ---- polynomial grammar: expr := term (('+'|'-') term)* ----
  Polynomial expr(const RingPtr& ring) {
    Polynomial acc = term(ring);
    while (at_punct("+") || at_punct("-")) {
      bool minus = lex_.take().text == "-";
      Polynomial t = term(ring);
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }
  Polynomial term(const RingPtr& ring) {
    Polynomial acc = factor(ring);
    while (at_punct("*")) {
      lex_.take();
      acc = acc * factor(ring);
    }
    return acc;
  }
  Polynomial factor(const RingPtr& ring) {
    Polynomial base = atom(ring);
    while (at_punct("^")) {
      lex_.take();
      Token e = expect_int();
      if (e.value < 0 || e.value > kMaxExponent)
        throw ParseError(e.line, e.col,
                         "exponent out of range (max " +
                             std::to_string(kMaxExponent) + ")");
      Polynomial r = Polynomial::constant(ring, 1);
      for (int64_t i = 0; i < e.value; ++i) r = r * base;
      base = r;
    }
    return base;
  }
  Polynomial atom(const RingPtr& ring) {
    const Token& t = lex_.peek();
    if (t.kind == Token::Int) return Polynomial::constant(ring, lex_.take().value);
    if (at_punct("-")) {
      lex_.take();
      return -factor(ring);
    }
    if (at_punct("(")) {
      lex_.take();
      Polynomial inner = expr(ring);
      expect_punct(")");
      return inner;
    }
    if (t.kind == Token::Ident) {
      for (int i = 0; i < ring->nvars(); ++i)
        if (ring->var_name(i) == t.text) {
          lex_.take();
          return Polynomial::variable(ring, i);
        }
      throw ParseError(t.line, t.col, "unknown variable '" + t.text + "'");
    }
    fail(t, "a polynomial atom");
  }

  MatrixLit matrix(const RingPtr& ring) {
    MatrixLit m;
    expect_punct("[");
    while (true) {
      expect_punct("[");
      std::vector<Polynomial> row;
      if (!at_punct("]")) {
        row.push_back(expr(ring));
        while (at_punct(",")) {
          lex_.take();
          row.push_back(expr(ring));
        }
      }
      expect_punct("]");
      m.rows.push_back(std::move(row));
      if (at_punct(",")) {
        lex_.take();
        continue;
      }
      break;
    }
    expect_punct("]");
    return m;
  }

  void require_ci(const SessionScript& s, const Token& at) {
    if (!s.ciring)
      throw ParseError(at.line, at.col, "a 'ci' declaration is required first");
  }

  void check_fresh_name(SessionScript& s, const Token& name) {
    for (const std::string& n : s.module_names)
      if (n == name.text)
        throw Error(ErrorCode::NameError, "duplicate name '" + name.text + "'");
    for (const std::string& n : s.set_names)
      if (n == name.text)
        throw Error(ErrorCode::NameError, "duplicate name '" + name.text + "'");
  }
  void require_module(const SessionScript& s, const Token& name) {
    for (const std::string& n : s.module_names)
      if (n == name.text) return;
    throw Error(ErrorCode::NameError, "undeclared module '" + name.text + "'");
  }
  void require_set(const SessionScript& s, const Token& name) {
    for (const std::string& n : s.set_names)
      if (n == name.text) return;
    throw Error(ErrorCode::NameError, "undeclared set '" + name.text + "'");
  }

  void statement(SessionScript& s) {
    Token head = expect_ident();
    Stmt st;
    if (head.text == "field") {
      Token v = expect_int();
      st.kind = Stmt::Kind::Field;
      st.p = uint32_t(v.value);
      if (s.qring)
        throw ParseError(head.line, head.col, "'field' must precede 'ring'");
      if (!p_override_) {
        if (!PrimeField::is_prime(uint32_t(v.value)))
          throw ParseError(v.line, v.col, "field characteristic must be prime");
        s.p = uint32_t(v.value);
      }
    } else if (head.text == "ring") {
      Token name = expect_ident();
      expect_punct("[");
      std::vector<std::string> vars;
      vars.push_back(expect_ident().text);
      while (at_punct(",")) {
        lex_.take();
        vars.push_back(expect_ident().text);
      }
      expect_punct("]");
      st.kind = Stmt::Kind::Ring;
      st.name = name.text;
      st.vars = vars;
      if (s.qring) throw ParseError(head.line, head.col, "ring already declared");
      s.qring = make_ring(s.p, vars);
    } else if (head.text == "ci") {
      if (!s.qring) throw ParseError(head.line, head.col, "'ring' must precede 'ci'");
      if (s.ciring) throw ParseError(head.line, head.col, "ci already declared");
      expect_punct("(");
      std::vector<Polynomial> gens;
      gens.push_back(expr(s.qring));
      while (at_punct(",")) {
        lex_.take();
        gens.push_back(expr(s.qring));
      }
      expect_punct(")");
      st.kind = Stmt::Kind::Ci;
      st.polys = gens;
      s.ciring = make_ci(s.qring, gens);
    } else if (head.text == "module") {
      require_ci(s, head);
      Token name = expect_ident();
      check_fresh_name(s, name);
      expect_punct("=");
      st.kind = Stmt::Kind::Module;
      st.name = name.text;
      st.mexpr = module_expr(s);
      s.module_names.push_back(name.text);
    } else if (head.text == "set") {
      require_ci(s, head);
      Token name = expect_ident();
      check_fresh_name(s, name);
      expect_punct("=");
      st.kind = Stmt::Kind::Set;
      st.name = name.text;
      st.sexpr = set_expr(s);
      s.set_names.push_back(name.text);
    } else {
      require_ci(s, head);
      st.kind = Stmt::Kind::Cmd;
      st.cmd = command(s, head);
    }
    expect_punct(";");
    s.stmts.push_back(std::move(st));
  }

  ModuleExpr module_expr(SessionScript& s) {
    ModuleExpr e;
    Token head = expect_ident();
    auto named_args = [&](int count) {
      expect_punct("(");
      for (int i = 0; i < count; ++i) {
        if (i) expect_punct(",");
        Token n = expect_ident();
        require_module(s, n);
        e.refs.push_back(n.text);
      }
    };
    if (head.text == "coker") {
      e.kind = ModuleExpr::Kind::Coker;
      e.mat = matrix(s.qring);
    } else if (head.text == "k") {
      e.kind = ModuleExpr::Kind::K;
    } else if (head.text == "free") {
      e.kind = ModuleExpr::Kind::Free;
      if (lex_.peek().kind == Token::Int) e.ints.push_back(expect_int().value);
    } else if (head.text == "sum") {
      e.kind = ModuleExpr::Kind::Sum;
      named_args(2);
      expect_punct(")");
    } else if (head.text == "twist") {
      e.kind = ModuleExpr::Kind::Twist;
      named_args(1);
      expect_punct(",");
      e.ints.push_back(signed_int());
      expect_punct(")");
    } else if (head.text == "dual") {
      e.kind = ModuleExpr::Kind::Dual;
      named_args(1);
      expect_punct(")");
    } else if (head.text == "syzygy" || head.text == "cosyzygy") {
      e.kind = head.text == "syzygy" ? ModuleExpr::Kind::Syzygy
                                     : ModuleExpr::Kind::Cosyzygy;
      named_args(1);
      expect_punct(",");
      e.ints.push_back(expect_int().value);
      expect_punct(")");
    } else if (head.text == "indicator") {
      e.kind = ModuleExpr::Kind::Indicator;
      expect_punct("(");
      expect_punct("(");
      e.point.push_back(signed_int());
      while (at_punct(":")) {
        lex_.take();
        e.point.push_back(signed_int());
      }
      expect_punct(")");
      expect_punct(")");
      if (int(e.point.size()) != s.ciring->codim())
        throw ParseError(head.line, head.col,
                         "point needs " + std::to_string(s.ciring->codim()) +
                             " coordinates");
    } else if (head.text == "random") {
      e.kind = ModuleExpr::Kind::Random;
      expect_punct("(");
      e.ints.push_back(expect_int().value);
      expect_punct(",");
      e.ints.push_back(expect_int().value);
      expect_punct(",");
      e.ints.push_back(expect_int().value);
      expect_punct(")");
    } else {
      fail(head, "a module expression");
    }
    return e;
  }

  SetExpr set_expr(SessionScript& s) {
    SetExpr e;
    Token head = expect_ident();
    if (head.text == "V") {
      e.kind = SetExpr::Kind::V;
      expect_punct("(");
      e.gens.push_back(expr(s.ciring->t_ring()));
      while (at_punct(",")) {
        lex_.take();
        e.gens.push_back(expr(s.ciring->t_ring()));
      }
      expect_punct(")");
    } else if (head.text == "empty") {
      e.kind = SetExpr::Kind::Empty;
    } else if (head.text == "all") {
      e.kind = SetExpr::Kind::All;
    } else {
      fail(head, "a set expression (V(...), empty, all)");
    }
    return e;
  }

  // Optional trailing context: "mod X" or "cxle i".
  void context(SessionScript& s, Command& c) {
    if (at_ident("mod")) {
      lex_.take();
      Token n = expect_ident();
      require_set(s, n);
      c.ctx = Command::Ctx::Mod;
      c.ctx_name = n.text;
    } else if (at_ident("cxle")) {
      lex_.take();
      c.ctx = Command::Ctx::CxLe;
      c.ctx_cut = expect_int().value;
    }
  }

  Command command(SessionScript& s, const Token& head) {
    Command c;
    c.verb = head.text;
    auto module_arg = [&]() {
      Token n = expect_ident();
      require_module(s, n);
      c.names.push_back(n.text);
    };
    if (c.verb == "betti" || c.verb == "complexity" || c.verb == "dimension" ||
        c.verb == "isfree" || c.verb == "reduce") {
      module_arg();
      if (c.verb == "betti" && lex_.peek().kind == Token::Int)
        c.ints.push_back(expect_int().value);
    } else if (c.verb == "resolve") {
      module_arg();
      c.ints.push_back(expect_int().value);
    } else if (c.verb == "support") {
      module_arg();
      context(s, c);
    } else if (c.verb == "pairsupport") {
      module_arg();
      module_arg();
    } else if (c.verb == "ext") {
      module_arg();
      module_arg();
      c.ints.push_back(expect_int().value);
      c.ints.push_back(expect_int().value);
    } else if (c.verb == "topv") {
      Token n = expect_ident();
      require_set(s, n);
      c.names.push_back(n.text);
    } else if (c.verb == "vi") {
      module_arg();
      c.ints.push_back(expect_int().value);
    } else if (c.verb == "audit") {
      Token kind = expect_ident();
      c.sub = kind.text;
      if (c.sub == "gar") {
        module_arg();
        context(s, c);
      } else if (c.sub == "murthy") {
        module_arg();
        module_arg();
        if (lex_.peek().kind == Token::Int) c.ints.push_back(expect_int().value);
        context(s, c);
      } else if (c.sub == "symmetry") {
        module_arg();
        module_arg();
        if (!at_ident("mod")) fail(lex_.peek(), "'mod <set>'");
        context(s, c);
        if (at_ident("split")) {
          lex_.take();
          Token a = expect_ident();
          require_module(s, a);
          Token b = expect_ident();
          require_module(s, b);
          c.split_names = {a.text, b.text};
        }
      } else if (c.sub == "hw") {
        module_arg();
        module_arg();
      } else {
        fail(kind, "an audit kind (gar, murthy, symmetry, hw)");
      }
    } else {
      fail(head, "a statement or command");
    }
    return c;
  }

  Lexer lex_;
  std::optional<uint32_t> p_override_;
};

std::string point_text(const std::vector<int64_t>& pt) {
  std::string s = "((";
  for (size_t i = 0; i < pt.size(); ++i) {
    if (i) s += ":";
    s += std::to_string(pt[i]);
  }
  return s + "))";
}

std::string matrix_text(const MatrixLit& m) {
  std::string s = "[";
  for (size_t r = 0; r < m.rows.size(); ++r) {
    if (r) s += ", ";
    s += "[";
    for (size_t c = 0; c < m.rows[r].size(); ++c) {
      if (c) s += ", ";
      s += m.rows[r][c].to_string();
    }
    s += "]";
  }
  return s + "]";
}

std::string mexpr_text(const ModuleExpr& e) {
  switch (e.kind) {
    case ModuleExpr::Kind::Coker: return "coker " + matrix_text(e.mat);
    case ModuleExpr::Kind::K: return "k";
    case ModuleExpr::Kind::Free:
      return e.ints.empty() ? "free" : "free " + std::to_string(e.ints[0]);
    case ModuleExpr::Kind::Sum: return "sum(" + e.refs[0] + ", " + e.refs[1] + ")";
    case ModuleExpr::Kind::Twist:
      return "twist(" + e.refs[0] + ", " + std::to_string(e.ints[0]) + ")";
    case ModuleExpr::Kind::Dual: return "dual(" + e.refs[0] + ")";
    case ModuleExpr::Kind::Syzygy:
      return "syzygy(" + e.refs[0] + ", " + std::to_string(e.ints[0]) + ")";
    case ModuleExpr::Kind::Cosyzygy:
      return "cosyzygy(" + e.refs[0] + ", " + std::to_string(e.ints[0]) + ")";
    case ModuleExpr::Kind::Indicator: return "indicator" + point_text(e.point);
    case ModuleExpr::Kind::Random:
      return "random(" + std::to_string(e.ints[0]) + ", " +
             std::to_string(e.ints[1]) + ", " + std::to_string(e.ints[2]) + ")";
  }
  return "";
}

std::string sexpr_text(const SetExpr& e) {
  switch (e.kind) {
    case SetExpr::Kind::Empty: return "empty";
    case SetExpr::Kind::All: return "all";
    case SetExpr::Kind::V: {
      std::string s = "V(";
      for (size_t i = 0; i < e.gens.size(); ++i) {
        if (i) s += ", ";
        s += e.gens[i].to_string();
      }
      return s + ")";
    }
  }
  return "";
}

std::string command_text(const Command& c) {
  std::string s = c.verb;
  if (!c.sub.empty()) s += " " + c.sub;
  for (const std::string& n : c.names) s += " " + n;
  for (int64_t v : c.ints) s += " " + std::to_string(v);
  if (c.ctx == Command::Ctx::Mod) s += " mod " + c.ctx_name;
  if (c.ctx == Command::Ctx::CxLe) s += " cxle " + std::to_string(c.ctx_cut);
  if (!c.split_names.empty())
    s += " split " + c.split_names[0] + " " + c.split_names[1];
  return s;
}

}  // namespace

SessionScript parse_script(const std::string& text,
                           std::optional<uint32_t> p_override) {
  Parser p(text, p_override);
  return p.parse();
}

std::string print_script(const SessionScript& s) {
  std::string out;
  for (const Stmt& st : s.stmts) {
    switch (st.kind) {
      case Stmt::Kind::Field:
        out += "field " + std::to_string(st.p);
        break;
      case Stmt::Kind::Ring: {
        out += "ring " + st.name + "[";
        for (size_t i = 0; i < st.vars.size(); ++i) {
          if (i) out += ", ";
          out += st.vars[i];
        }
        out += "]";
        break;
      }
      case Stmt::Kind::Ci: {
        out += "ci (";
        for (size_t i = 0; i < st.polys.size(); ++i) {
          if (i) out += ", ";
          out += st.polys[i].to_string();
        }
        out += ")";
        break;
      }
      case Stmt::Kind::Module:
        out += "module " + st.name + " = " + mexpr_text(st.mexpr);
        break;
      case Stmt::Kind::Set:
        out += "set " + st.name + " = " + sexpr_text(st.sexpr);
        break;
      case Stmt::Kind::Cmd:
        out += command_text(st.cmd);
        break;
    }
    out += ";\n";
  }
  return out;
}

Polynomial parse_polynomial_text(const RingPtr& ring, const std::string& text) {
  Parser p(text, std::nullopt);
  return p.polynomial(ring);
}

}  // namespace cisupport
