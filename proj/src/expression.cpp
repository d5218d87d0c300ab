#include "cohen/expression.hpp"

#include <cctype>
#include <charconv>

#include "cohen/errors.hpp"

namespace cohen {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : s_(text), n_(n) {}

  Expr run() {
    Expr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t integer(bool allow_sign) {
    const std::size_t start = pos_;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string_view digits = s_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || p != digits.data() + digits.size()) {
      pos_ = start;
      fail("expected an integer");
    }
    return v;
  }

  bool at_term_start() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == 's' || c == 'a' || c == 'D' || c == 'e' || c == '(' || c == '[';
  }

  Expr expr() {
    Expr cat{Expr::Kind::Concat, 0, 0, 1, {}};
    if (!at_term_start()) fail("expected a braid expression");
    while (at_term_start()) cat.kids.push_back(term());
    if (cat.kids.size() == 1) return std::move(cat.kids.front());
    return cat;
  }

  Expr term() {
    Expr e = primary();
    while (true) {
      if (peek('^')) {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        const std::int64_t k = integer(true);
        if (k == 0) {
          pos_ = at;
          fail("zero power");
        }
        e = Expr{Expr::Kind::Power, 0, 0, k, {std::move(e)}};
      } else if (peek('\'')) {
        ++pos_;
        if (e.kind == Expr::Kind::Sigma)
          e.exp = -e.exp;
        else
          e = Expr{Expr::Kind::Power, 0, 0, -1, {std::move(e)}};
      } else {
        return e;
      }
    }
  }

  int index() {
    const std::size_t at = pos_;
    const std::int64_t v = integer(false);
    if (v < 1 || v > 1'000'000) {
      pos_ = at;
      fail("index out of range");
    }
    return static_cast<int>(v);
  }

  Expr primary() {
    skip_ws();
    const std::size_t at = pos_;
    const char c = s_[pos_++];
    switch (c) {
      case 's': {
        const int i = index();
        if (i >= n_) {
          pos_ = at;
          fail("s" + std::to_string(i) + " outside B_" + std::to_string(n_));
        }
        return Expr{Expr::Kind::Sigma, i, 0, 1, {}};
      }
      case 'a': {
        const int i = index();
        if (pos_ >= s_.size() || s_[pos_] != '.') fail("expected '.' in a<i>.<j>");
        ++pos_;
        const int j = index();
        if (!(i < j && j <= n_)) {
          pos_ = at;
          fail("a" + std::to_string(i) + "." + std::to_string(j) + " outside P_" +
               std::to_string(n_));
        }
        return Expr{Expr::Kind::AGen, i, j, 1, {}};
      }
      case 'D': return Expr{Expr::Kind::Delta, 0, 0, 1, {}};
      case 'e': return Expr{Expr::Kind::Identity, 0, 0, 1, {}};
      case '(': {
        Expr e = expr();
        expect(')');
        return e;
      }
      case '[': {
        Expr e{Expr::Kind::Commutator, 0, 0, 1, {}};
        e.kids.push_back(expr());
        while (peek(',')) {
          ++pos_;
          e.kids.push_back(expr());
        }
        if (e.kids.size() < 2) fail("commutator needs at least two entries");
        expect(']');
        return e;
      }
      default:
        pos_ = at;
        fail("unexpected '" + std::string(1, c) + "'");
    }
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

bool is_atom(const Expr& e) {
  return e.kind == Expr::Kind::Sigma || e.kind == Expr::Kind::AGen ||
         e.kind == Expr::Kind::Delta || e.kind == Expr::Kind::Identity ||
         e.kind == Expr::Kind::Commutator;
}

}  // namespace

Expr parse(std::string_view text, int n) {
  if (n < 1) throw PreconditionError("parse: strand count must be positive");
  return Parser(text, n).run();
}

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Sigma:
      return "s" + std::to_string(e.i) + (e.exp < 0 ? "'" : "");
    case Expr::Kind::AGen:
      return "a" + std::to_string(e.i) + "." + std::to_string(e.j);
    case Expr::Kind::Delta: return "D";
    case Expr::Kind::Identity: return "e";
    case Expr::Kind::Power: {
      const Expr& base = e.kids.front();
      std::string inner = print(base);
      if (!is_atom(base) || (base.kind == Expr::Kind::Sigma && base.exp < 0))
        inner = "( " + inner + " )";
      return inner + "^" + std::to_string(e.exp);
    }
    case Expr::Kind::Concat: {
      std::string out;
      for (const auto& k : e.kids) {
        if (!out.empty()) out += ' ';
        out += k.kind == Expr::Kind::Concat ? "( " + print(k) + " )" : print(k);
      }
      return out;
    }
    case Expr::Kind::Commutator: {
      std::string out = "[ ";
      for (std::size_t k = 0; k < e.kids.size(); ++k) {
        if (k) out += " , ";
        out += print(e.kids[k]);
      }
      return out + " ]";
    }
  }
  return "e";
}

BraidWord to_braid(const Expr& e, int n) {
  switch (e.kind) {
    case Expr::Kind::Sigma: return BraidWord(n, {static_cast<int>(e.exp) * e.i});
    case Expr::Kind::AGen: return a_gen(e.i, e.j, n);
    case Expr::Kind::Delta: return half_twist(n);
    case Expr::Kind::Identity: return BraidWord(n);
    case Expr::Kind::Power: return braid_power(to_braid(e.kids.front(), n), e.exp);
    case Expr::Kind::Concat: {
      BraidWord out(n);
      for (const auto& k : e.kids) out = out * to_braid(k, n);
      return out;
    }
    case Expr::Kind::Commutator: {
      BraidWord acc = to_braid(e.kids.front(), n);
      for (std::size_t k = 1; k < e.kids.size(); ++k) {
        BraidWord b = to_braid(e.kids[k], n);
        acc = invert_braid(acc) * invert_braid(b) * acc * b;
      }
      return acc;
    }
  }
  return BraidWord(n);
}

std::optional<PureAWord> to_aword(const Expr& e, int n) {
  switch (e.kind) {
    case Expr::Kind::Sigma:
    case Expr::Kind::Delta: return std::nullopt;
    case Expr::Kind::AGen: return PureAWord::gen(e.i, e.j, n);
    case Expr::Kind::Identity: return PureAWord(n);
    case Expr::Kind::Power: {
      auto base = to_aword(e.kids.front(), n);
      if (!base) return std::nullopt;
      return power(*base, e.exp);
    }
    case Expr::Kind::Concat: {
      PureAWord out(n);
      for (const auto& k : e.kids) {
        auto w = to_aword(k, n);
        if (!w) return std::nullopt;
        out = out * *w;
      }
      return out;
    }
    case Expr::Kind::Commutator: {
      std::vector<GroupWord> entries;
      for (const auto& k : e.kids) {
        auto w = to_aword(k, n);
        if (!w) return std::nullopt;
        entries.push_back(w->word());
      }
      return PureAWord(commutator(entries));
    }
  }
  return std::nullopt;
}

}  // namespace cohen
