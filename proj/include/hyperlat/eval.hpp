//  Copyright 2026 The hyperlat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

//  A small expression language over one carrier and one hyperoperation:
//
//    expr  := call | '[' expr ',' expr ']' | atom
//    call  := ('meet'|'join'|'hmeet'|'hjoin') '(' expr ',' expr ')'
//           | 'neg' '(' expr ')'
//
//  Atoms are element names; on rational carriers "p/q" works directly. A
//  word is a keyword only when a '(' follows, so elements may share keyword
//  spellings. Values are single elements or intervals; meet/join promote
//  mixed operands to intervals componentwise, hmeet/hjoin of two elements
//  produce the hyperoperation interval, and hmeet/hjoin of an element with
//  an interval use the closed forms (single-pair mode only). Check witnesses
//  are printed in exactly this syntax so they can be replayed verbatim.

#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperlat/hyperops.hpp"

namespace hyperlat {

/// Parses and evaluates expressions against a fixed carrier and
/// hyperoperation. Throws ParseError (with a byte offset) on bad syntax,
/// ForeignElement for unknown atoms, and whatever the underlying operations
/// throw (ModeUnsupported, EmptyOperand) on semantic misuse.
template <Carrier C>
class Evaluator {
 public:
  using E = element_t<C>;
  using Value = std::variant<E, Interval<C>>;

  Evaluator(const C& c, const HyperConnective<C>& h) : carrier_(&c), hyper_(&h) {}

  Value evaluate(std::string_view text) const {
    Parser parser{*this, tokenize(text), 0};
    Value v = parser.parse_expr();
    const Token& tail = parser.peek();
    if (tail.kind != Kind::End) {
      throw ParseError("unexpected trailing input '" + tail.text + "'", tail.pos);
    }
    return v;
  }

  /// Element name for single elements, "[lo, hi]" for intervals.
  std::string render(const Value& v) const {
    if (std::holds_alternative<E>(v)) {
      return std::string(carrier_->format(std::get<E>(v)));
    }
    return format_interval(*carrier_, std::get<Interval<C>>(v));
  }

 private:
  enum class Kind { Word, LParen, RParen, LBracket, RBracket, Comma, End };

  struct Token {
    Kind kind;
    std::string text;
    std::size_t pos;
  };

  static bool is_punct(char ch) {
    return ch == '(' || ch == ')' || ch == '[' || ch == ']' || ch == ',';
  }

  static std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
      const char ch = text[i];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
        continue;
      }
      if (is_punct(ch)) {
        Kind k = ch == '(' ? Kind::LParen
                 : ch == ')' ? Kind::RParen
                 : ch == '[' ? Kind::LBracket
                 : ch == ']' ? Kind::RBracket
                             : Kind::Comma;
        out.push_back({k, std::string(1, ch), i});
        ++i;
        continue;
      }
      if (ch == '{') {
        // Set-valued element names such as "{a,c}" are atomic: the commas
        // inside the braces are part of the name, not argument separators.
        std::size_t close = text.find('}', i);
        if (close == std::string_view::npos) {
          throw ParseError("unterminated '{' in element name", i);
        }
        out.push_back({Kind::Word, std::string(text.substr(i, close - i + 1)), i});
        i = close + 1;
        continue;
      }
      if (ch == '}') {
        throw ParseError("'}' without a matching '{'", i);
      }
      std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             !is_punct(text[i]) && text[i] != '{' && text[i] != '}') {
        ++i;
      }
      out.push_back({Kind::Word, std::string(text.substr(start, i - start)), start});
    }
    out.push_back({Kind::End, "", text.size()});
    return out;
  }

  struct Parser {
    const Evaluator& ev;
    std::vector<Token> tokens;
    std::size_t cursor;

    const Token& peek() const { return tokens[cursor]; }

    const Token& advance() { return tokens[cursor++]; }

    const Token& expect(Kind kind, const char* what) {
      const Token& t = peek();
      if (t.kind != kind) {
        throw ParseError(std::string("expected ") + what + " but found '" +
                             (t.kind == Kind::End ? "end of input" : t.text) + "'",
                         t.pos);
      }
      return advance();
    }

    Value parse_expr() {
      const Token& t = peek();
      switch (t.kind) {
        case Kind::LBracket:
          return parse_interval();
        case Kind::Word:
          if (is_keyword(t.text) && tokens[cursor + 1].kind == Kind::LParen) {
            return parse_call();
          }
          advance();
          return ev.resolve_atom(t);
        case Kind::End:
          throw ParseError("expected an expression but found end of input", t.pos);
        default:
          throw ParseError("expected an expression but found '" + t.text + "'",
                           t.pos);
      }
    }

    Value parse_interval() {
      const Token& open = expect(Kind::LBracket, "'['");
      Value lo = parse_expr();
      expect(Kind::Comma, "','");
      Value hi = parse_expr();
      expect(Kind::RBracket, "']'");
      if (!std::holds_alternative<E>(lo) || !std::holds_alternative<E>(hi)) {
        throw ParseError("interval endpoints must be single elements", open.pos);
      }
      return Interval<C>::of(*ev.carrier_, std::get<E>(lo), std::get<E>(hi));
    }

    static bool is_keyword(const std::string& w) {
      return w == "meet" || w == "join" || w == "hmeet" || w == "hjoin" ||
             w == "neg";
    }

    Value parse_call() {
      const Token& name = advance();
      expect(Kind::LParen, "'('");
      Value first = parse_expr();
      if (name.text == "neg") {
        expect(Kind::RParen, "')'");
        return ev.apply_neg(first);
      }
      expect(Kind::Comma, "','");
      Value second = parse_expr();
      expect(Kind::RParen, "')'");
      if (name.text == "meet" || name.text == "join") {
        return ev.apply_lattice(name.text == "meet", first, second);
      }
      return ev.apply_hyper(name.text == "hmeet", first, second);
    }
  };

  Value resolve_atom(const Token& t) const {
    if constexpr (std::same_as<C, UnitInterval>) {
      if (auto v = UnitRational::parse(t.text)) return *v;
      throw ForeignElement("'" + t.text +
                           "' is not a rational p/q inside [0, 1]");
    } else {
      if (auto id = carrier_->find(t.text)) return *id;
      if (carrier_->grid_values()) {
        if (auto v = UnitRational::parse(t.text)) {
          if (auto id = carrier_->find_grid_value(*v)) return *id;
          throw ForeignElement("value " + v->str() + " is not on the grid of carrier '" +
                               carrier_->name() + "'");
        }
      }
      throw ForeignElement("carrier '" + carrier_->name() +
                           "' has no element named '" + t.text + "'");
    }
  }

  Value apply_neg(const Value& v) const {
    if (std::holds_alternative<E>(v)) return carrier_->negate(std::get<E>(v));
    return interval_negate(*carrier_, std::get<Interval<C>>(v));
  }

  static Interval<C> promote(const Value& v) {
    if (std::holds_alternative<E>(v)) return Interval<C>::singleton(std::get<E>(v));
    return std::get<Interval<C>>(v);
  }

  Value apply_lattice(bool is_meet, const Value& a, const Value& b) const {
    if (std::holds_alternative<E>(a) && std::holds_alternative<E>(b)) {
      const E& x = std::get<E>(a);
      const E& y = std::get<E>(b);
      return is_meet ? carrier_->meet(x, y) : carrier_->join(x, y);
    }
    const Interval<C> ia = promote(a);
    const Interval<C> ib = promote(b);
    return is_meet ? interval_inf(*carrier_, ia, ib)
                   : interval_sup(*carrier_, ia, ib);
  }

  Value apply_hyper(bool is_meet, const Value& a, const Value& b) const {
    const bool ae = std::holds_alternative<E>(a);
    const bool be = std::holds_alternative<E>(b);
    if (ae && be) {
      const E& x = std::get<E>(a);
      const E& y = std::get<E>(b);
      return is_meet ? hyper_->hyper_meet(x, y) : hyper_->hyper_join(x, y);
    }
    if (!ae && !be) {
      throw ModeUnsupported(std::string(is_meet ? "hmeet" : "hjoin") +
                            " of two intervals is not defined; at most one "
                            "operand may be an interval");
    }
    const E& x = std::get<E>(ae ? a : b);
    const Interval<C>& j = std::get<Interval<C>>(ae ? b : a);
    return is_meet ? hyper_->meet_on_interval(x, j)
                   : hyper_->join_on_interval(x, j);
  }

  const C* carrier_;
  const HyperConnective<C>* hyper_;
};

}  // namespace hyperlat
