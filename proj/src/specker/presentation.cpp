#include "specker/presentation.hpp"

#include <cctype>
#include <sstream>

#include "specker/error.hpp"

namespace specker {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TermPtr parse() {
    TermPtr t = expr();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw Error(ErrorCode::parse, "syntax error at position " + std::to_string(pos_) + ": " + what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) error(std::string("expected '") + c + "' before end of input");
      error(std::string("expected '") + c + "'");
    }
  }

  static TermPtr node(Term::Kind kind, std::size_t pos, std::vector<TermPtr> children) {
    auto t = std::make_shared<Term>();
    t->kind = kind;
    t->position = pos;
    t->children = std::move(children);
    return t;
  }

  TermPtr expr() {
    skip_space();
    std::size_t start = pos_;
    TermPtr lhs = addend();
    for (;;) {
      if (accept('+')) {
        lhs = node(Term::Kind::add, start, {lhs, addend()});
      } else if (accept('-')) {
        lhs = node(Term::Kind::sub, start, {lhs, addend()});
      } else {
        return lhs;
      }
    }
  }

  TermPtr addend() {
    skip_space();
    std::size_t start = pos_;
    TermPtr lhs = factor();
    while (accept('*')) lhs = node(Term::Kind::mul, start, {lhs, factor()});
    return lhs;
  }

  TermPtr factor() {
    skip_space();
    std::size_t start = pos_;
    TermPtr base = unary();
    while (accept('^')) {
      skip_space();
      std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (digits == pos_) {
        pos_ = digits;
        error("expected a natural-number exponent");
      }
      auto t = std::make_shared<Term>();
      t->kind = Term::Kind::pow;
      t->position = start;
      t->exponent = std::stoul(std::string(text_.substr(digits, pos_ - digits)));
      t->children = {base};
      base = t;
    }
    return base;
  }

  TermPtr unary() {
    skip_space();
    std::size_t start = pos_;
    if (accept('-')) return node(Term::Kind::neg, start, {unary()});
    return atom();
  }

  TermPtr atom() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      TermPtr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return scalar();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string ident(text_.substr(start, pos_ - start));
      skip_space();
      bool call = pos_ < text_.size() && text_[pos_] == '(';
      if (call && (ident == "meet" || ident == "join")) {
        ++pos_;
        TermPtr a = expr();
        expect(',');
        TermPtr b = expr();
        expect(')');
        return node(ident == "meet" ? Term::Kind::meet : Term::Kind::join, start, {a, b});
      }
      if (call) {
        pos_ = start;
        error("unknown function '" + ident + "'");
      }
      auto t = std::make_shared<Term>();
      t->kind = Term::Kind::generator;
      t->position = start;
      t->name = std::move(ident);
      return t;
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  TermPtr scalar() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::literal;
    t->position = start;
    try {
      t->literal = Scalar::parse(text_.substr(start, pos_ - start));
    } catch (const Error& e) {
      throw Error(ErrorCode::parse, std::string("at position ") + std::to_string(start) + ": " + e.what(), start);
    }
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Term::to_sexpr() const {
  auto bin = [&](const char* op) {
    return std::string("(") + op + " " + children[0]->to_sexpr() + " " + children[1]->to_sexpr() + ")";
  };
  switch (kind) {
    case Kind::literal: return literal.to_string();
    case Kind::generator: return name;
    case Kind::add: return bin("+");
    case Kind::sub: return bin("-");
    case Kind::mul: return bin("*");
    case Kind::meet: return bin("meet");
    case Kind::join: return bin("join");
    case Kind::neg: return "(neg " + children[0]->to_sexpr() + ")";
    case Kind::pow: return "(^ " + children[0]->to_sexpr() + " " + std::to_string(exponent) + ")";
  }
  return "?";
}

TermPtr parse_term(std::string_view text) { return Parser(text).parse(); }

Binding default_binding(const AlgebraPtr& alg) {
  Binding b;
  b.emplace("x_0", IdElem::zero(alg));
  b.emplace("x_1", IdElem::one(alg));
  for (std::size_t i = 0; i < alg->atom_count(); ++i) {
    b.insert_or_assign("x_" + alg->atoms()[i], IdElem(alg, AtomMask{1} << i));
  }
  for (const auto& [name, mask] : alg->generators()) b.insert_or_assign("x_" + name, IdElem(alg, mask));
  return b;
}

PerpElem normalize_term(const Term& term, const AlgebraPtr& alg, const Binding& binding) {
  auto rec = [&](const Term& t) { return normalize_term(t, alg, binding); };
  switch (term.kind) {
    case Term::Kind::literal:
      return PerpElem::constant(alg, term.literal);
    case Term::Kind::generator: {
      auto it = binding.find(term.name);
      if (it == binding.end()) fail(ErrorCode::unbound_name, "unbound generator '" + term.name + "'");
      require_same(*alg, *it->second.algebra());
      return idem_embed_perp(it->second);
    }
    case Term::Kind::add: return perp_add(rec(*term.children[0]), rec(*term.children[1]));
    case Term::Kind::sub: return perp_sub(rec(*term.children[0]), rec(*term.children[1]));
    case Term::Kind::mul: return perp_mul(rec(*term.children[0]), rec(*term.children[1]));
    case Term::Kind::neg: return perp_neg(rec(*term.children[0]));
    case Term::Kind::meet: return perp_meet(rec(*term.children[0]), rec(*term.children[1]));
    case Term::Kind::join: return perp_join(rec(*term.children[0]), rec(*term.children[1]));
    case Term::Kind::pow: {
      PerpElem base = rec(*term.children[0]);
      PerpElem acc = PerpElem::constant(alg, Scalar(1));
      for (unsigned long e = term.exponent; e != 0; e >>= 1) {
        if (e & 1) acc = perp_mul(acc, base);
        if (e > 1) base = perp_mul(base, base);
      }
      return acc;
    }
  }
  fail(ErrorCode::internal, "unknown term kind");
}

PerpElem normalize_term(const Term& term, const AlgebraPtr& alg) {
  return normalize_term(term, alg, default_binding(alg));
}

}  // namespace specker
