#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "praset/core.hpp"
#include "praset/program.hpp"

namespace praset {

// ---- rendering (the inverse of parsing; shared by reports and tests) ----

inline std::string render(const Program& p, ObjLit l) {
  return (l.negated() ? "-" : "") + p.atoms[l.atom()];
}

inline std::string render(const Program& p, Lit l) {
  return (l.naf ? "not " : "") + render(p, l.obj);
}

// Objective literals of `m`, ascending by slot, joined with ", ".
inline std::string render_obj_mask(const Program& p, Mask m, bool naf = false) {
  std::string out;
  for (Mask rest = m; rest;) {
    int id = lowest_bit(rest);
    rest &= rest - 1;
    if (!out.empty()) out += ", ";
    if (naf) out += "not ";
    out += render(p, ObjLit{id});
  }
  return out;
}

inline std::string render_rule(const Program& p, const Rule& r) {
  std::string out = r.name + ": " + render(p, r.head);
  std::string body = render_obj_mask(p, r.body_pos);
  std::string naf = render_obj_mask(p, r.body_naf, /*naf=*/true);
  if (!naf.empty()) body += body.empty() ? naf : ", " + naf;
  if (!body.empty()) out += " :- " + body;
  return out + ".";
}

inline std::string render_program(const Program& p) {
  std::string out;
  for (const auto& r : p.rules) out += render_rule(p, r) + "\n";
  for (const auto& pr : p.prefers)
    out += "prefer " + p.rules[pr.more].name + " > " + p.rules[pr.less].name + ".\n";
  return out;
}

// ---- parsing ----

namespace detail {

enum class Tok { Ident, Not, Prefer, Colon, If, Dot, Comma, Greater, Minus, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_blank();
    tok_ = {Tok::End, "", line_, col_};
    if (pos_ >= src_.size()) return;
    char c = src_[pos_];
    if (c == '.') return one(Tok::Dot, ".");
    if (c == ',') return one(Tok::Comma, ",");
    if (c == '>') return one(Tok::Greater, ">");
    if (c == '-') return one(Tok::Minus, "-");
    if (c == ':') {
      if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
        tok_.kind = Tok::If;
        tok_.text = ":-";
        step();
        step();
        return;
      }
      return one(Tok::Colon, ":");
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_'))
        step();
      tok_.text = std::string(src_.substr(start, pos_ - start));
      tok_.kind = tok_.text == "not"      ? Tok::Not
                  : tok_.text == "prefer" ? Tok::Prefer
                                          : Tok::Ident;
      return;
    }
    throw parse_error(line_, col_, "unexpected character '" + std::string(1, c) + "'");
  }

  void one(Tok k, const char* text) {
    tok_.kind = k;
    tok_.text = text;
    step();
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') step();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        step();
      } else {
        break;
      }
    }
    tok_.line = line_;
    tok_.col = col_;
  }

  void step() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  Program parse() {
    Program p;
    while (lex_.peek().kind != Tok::End) statement(p);
    return p;
  }

 private:
  void statement(Program& p) {
    if (lex_.peek().kind == Tok::Prefer) {
      lex_.take();
      std::string more = expect(Tok::Ident, "expected rule name").text;
      expect(Tok::Greater, "expected '>'");
      std::string less = expect(Tok::Ident, "expected rule name").text;
      expect(Tok::Dot, "expected '.'");
      p.add_preference(more, less);
      return;
    }
    Token name = expect(Tok::Ident, "expected rule name or 'prefer'");
    expect(Tok::Colon, "expected ':'");
    Rule r;
    r.name = name.text;
    r.head = objective(p);
    if (lex_.peek().kind == Tok::If) {
      lex_.take();
      if (lex_.peek().kind != Tok::Dot) {  // ':- .' is an explicit fact
        while (true) {
          Lit l = body_literal(p);
          (l.naf ? r.body_naf : r.body_pos) |= bit(l.obj);
          if (lex_.peek().kind != Tok::Comma) break;
          lex_.take();  // a comma commits to another body literal
        }
      }
    }
    expect(Tok::Dot, "expected '.'");
    p.add_rule(std::move(r));
  }

  Lit body_literal(Program& p) {
    Lit l;
    if (lex_.peek().kind == Tok::Not) {
      lex_.take();
      l.naf = true;
    }
    l.obj = objective(p);
    return l;
  }

  ObjLit objective(Program& p) {
    bool neg = false;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      neg = true;
    }
    Token atom = expect(Tok::Ident, "expected atom");
    return ObjLit::make(p.intern_atom(atom.text), neg);
  }

  Token expect(Tok kind, const char* what) {
    if (lex_.peek().kind != kind) {
      const Token& t = lex_.peek();
      throw parse_error(t.line, t.col, what);
    }
    return lex_.take();
  }

  Lexer lex_;
};

}  // namespace detail

inline Program parse_program(std::string_view text) { return detail::Parser(text).parse(); }

inline Program parse_program_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open program file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_program(buf.str());
}

}  // namespace praset
