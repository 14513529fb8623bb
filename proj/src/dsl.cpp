#include "zelcalc/dsl.hpp"

#include <algorithm>
#include <cctype>

namespace zelcalc {

namespace {

constexpr std::size_t kMaxDigits = 15;

enum class Tok { LBracket, RBracket, Comma, Plus, Star, LParen, RParen, At, AtAt, Num, Ident, Empty, End };

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Plus: return "'+'";
    case Tok::Star: return "'*'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::At: return "'@'";
    case Tok::AtAt: return "'@@'";
    case Tok::Num: return "number";
    case Tok::Ident: return "identifier";
    case Tok::Empty: return "'empty'";
    case Tok::End: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind;
  SourceSpan span;
  std::string_view text;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '!'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

[[noreturn]] void syntax_error(const std::string& message, SourceSpan span) {
  throw ParseError(ErrorCode::SyntaxError, message, span);
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ == text_.size()) return {Tok::End, {start, start}, {}};
    const char c = text_[pos_];
    auto single = [&](Tok kind) {
      ++pos_;
      return Token{kind, {start, pos_}, text_.substr(start, 1)};
    };
    switch (c) {
      case '[': return single(Tok::LBracket);
      case ']': return single(Tok::RBracket);
      case ',': return single(Tok::Comma);
      case '+': return single(Tok::Plus);
      case '*': return single(Tok::Star);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '@':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '@') {
          pos_ += 2;
          return {Tok::AtAt, {start, pos_}, text_.substr(start, 2)};
        }
        return single(Tok::At);
      default: break;
    }
    if (c == '-' || digit(c)) {
      ++pos_;
      while (pos_ < text_.size() && (digit(text_[pos_]) || text_[pos_] == '/')) ++pos_;
      return {Tok::Num, {start, pos_}, text_.substr(start, pos_ - start)};
    }
    if (ident_start(c)) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string_view word = text_.substr(start, pos_ - start);
      return {word == "empty" ? Tok::Empty : Tok::Ident, {start, pos_}, word};
    }
    syntax_error("unexpected character '" + std::string(1, c) + "'", {start, start + 1});
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  RepAst rep() {
    RepAst out;
    if (cur_.kind == Tok::LParen) {
      out.parenthesized = true;
      for (;;) {
        const Token open = expect(Tok::LParen);
        if (cur_.kind == Tok::RParen) syntax_error("empty factor", {open.span.start, cur_.span.end});
        MultiSegmentAst m = mseg();
        if (m.segments.empty()) syntax_error("empty factor", m.span);
        expect(Tok::RParen);
        out.factors.push_back(std::move(m));
        if (cur_.kind != Tok::Star) break;
        advance();
      }
      if (cur_.kind == Tok::AtAt) {
        advance();
        const Token id = expect(Tok::Ident);
        for (MultiSegmentAst& m : out.factors) {
          if (!m.default_line) m.default_line = std::string(id.text);
        }
      }
    } else {
      out.factors.push_back(mseg());
    }
    expect(Tok::End);
    for (const MultiSegmentAst& m : out.factors) check_lines(m);
    return out;
  }

  MultiSegmentAst standalone_mseg() {
    MultiSegmentAst m = mseg();
    expect(Tok::End);
    check_lines(m);
    return m;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  Token expect(Tok kind) {
    if (cur_.kind != kind) {
      syntax_error("expected " + std::string(describe(kind)) + ", found " + std::string(describe(cur_.kind)),
                   cur_.span);
    }
    Token t = cur_;
    advance();
    return t;
  }

  MultiSegmentAst mseg() {
    MultiSegmentAst m;
    m.span.start = cur_.span.start;
    if (cur_.kind == Tok::Empty) {
      m.span.end = cur_.span.end;
      advance();
    } else {
      m.segments.push_back(seg());
      while (cur_.kind == Tok::Plus || cur_.kind == Tok::Comma) {
        advance();
        m.segments.push_back(seg());
      }
      m.span.end = m.segments.back().span.end;
    }
    if (cur_.kind == Tok::AtAt) {
      advance();
      const Token id = expect(Tok::Ident);
      m.default_line = std::string(id.text);
      m.span.end = id.span.end;
    }
    return m;
  }

  HalfInt num() {
    const Token t = expect(Tok::Num);
    auto v = parse_half_int(t.text);
    if (!v) syntax_error("malformed number '" + std::string(t.text) + "'", t.span);
    return *v;
  }

  SegmentAst seg() {
    SegmentAst s;
    const Token open = expect(Tok::LBracket);
    s.b = num();
    s.e = s.b;
    if (cur_.kind == Tok::Comma) {
      advance();
      s.e = num();
    }
    const Token close = expect(Tok::RBracket);
    s.span = {open.span.start, close.span.end};
    if (cur_.kind == Tok::At) {
      advance();
      const Token id = expect(Tok::Ident);
      s.line = std::string(id.text);
      s.line_span = id.span;
      s.span.end = id.span.end;
    }
    if (s.b > s.e) {
      throw ParseError(ErrorCode::EmptySegment, "segment [" + s.b.str() + "," + s.e.str() + "] is empty", s.span);
    }
    if (!(s.e - s.b).is_integral()) {
      throw ParseError(ErrorCode::LatticeMismatch,
                       "segment [" + s.b.str() + "," + s.e.str() + "] mixes integral and half-integral exponents",
                       s.span);
    }
    return s;
  }

  static void check_lines(const MultiSegmentAst& m) {
    for (const SegmentAst& s : m.segments) {
      if (!s.line && !m.default_line) syntax_error("segment has no line and no '@@' default", s.span);
    }
  }

  Lexer lexer_;
  Token cur_{Tok::End, {}, {}};
};

struct Named {
  std::string line;
  HalfInt b;
  HalfInt e;
};

std::vector<Named> canonical_named(const MultiSegmentAst& m) {
  std::vector<Named> out;
  for (const SegmentAst& s : m.segments) out.push_back({s.line ? *s.line : *m.default_line, s.b, s.e});
  std::sort(out.begin(), out.end(), [](const Named& x, const Named& y) {
    if (x.line != y.line) return x.line < y.line;
    if (x.b != y.b) return x.b > y.b;
    return x.e > y.e;
  });
  return out;
}

std::string segment_text(std::string_view line, HalfInt b, HalfInt e) {
  std::string out = "[" + b.str();
  if (e != b) out += "," + e.str();
  out += "]@";
  out += line;
  return out;
}

}  // namespace

std::optional<HalfInt> parse_half_int(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text[0] == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::string_view whole = text;
  bool halved = false;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (text.substr(slash + 1) != "2") return std::nullopt;
    whole = text.substr(0, slash);
    halved = true;
  }
  if (whole.empty() || whole.size() > kMaxDigits || !std::all_of(whole.begin(), whole.end(), digit)) {
    return std::nullopt;
  }
  std::int64_t value = 0;
  for (char c : whole) value = value * 10 + (c - '0');
  std::int64_t doubled = halved ? value : 2 * value;
  return HalfInt::from_doubled(negative ? -doubled : doubled);
}

MultiSegmentAst parse_multisegment_syntax(std::string_view text) { return Parser(text).standalone_mseg(); }

RepAst parse_rep_syntax(std::string_view text) { return Parser(text).rep(); }

std::string format_ast(const MultiSegmentAst& m) {
  if (m.segments.empty()) return "empty";
  std::string out;
  for (const Named& s : canonical_named(m)) {
    if (!out.empty()) out += "+";
    out += segment_text(s.line, s.b, s.e);
  }
  return out;
}

std::string format_ast(const RepAst& r) {
  if (!r.parenthesized) return "(" + format_ast(r.factors.at(0)) + ")";
  std::string out;
  for (const MultiSegmentAst& f : r.factors) {
    if (!out.empty()) out += "*";
    out += "(" + format_ast(f) + ")";
  }
  return out;
}

MultiSegment resolve(const MultiSegmentAst& m, const Universe& u) {
  std::vector<Segment> out;
  out.reserve(m.segments.size());
  for (const SegmentAst& s : m.segments) {
    const std::string& name = s.line ? *s.line : *m.default_line;
    auto id = u.find(name);
    if (!id) {
      throw ParseError(ErrorCode::UnknownLine, "unknown line '" + name + "'", s.line ? s.line_span : s.span);
    }
    out.emplace_back(*id, s.b, s.e);
  }
  return MultiSegment(std::move(out));
}

RepSpec resolve(const RepAst& r, const Universe& u) {
  std::vector<MultiSegment> factors;
  for (const MultiSegmentAst& f : r.factors) {
    if (f.segments.empty()) throw ParseError(ErrorCode::SyntaxError, "empty factor", f.span);
    factors.push_back(resolve(f, u));
  }
  return RepSpec(std::move(factors));
}

MultiSegment parse_multisegment(std::string_view text, const Universe& u) {
  return resolve(parse_multisegment_syntax(text), u);
}

RepSpec parse_rep(std::string_view text, const Universe& u) { return resolve(parse_rep_syntax(text), u); }

std::string format_segment(const Segment& s, const Universe& u) {
  return segment_text(u.name(s.line()), s.b(), s.e());
}

std::string format_multisegment(const MultiSegment& m, const Universe& u) {
  if (m.empty()) return "empty";
  std::string out;
  for (const Segment& s : m) {
    if (!out.empty()) out += "+";
    out += format_segment(s, u);
  }
  return out;
}

std::string format_rep(const RepSpec& r, const Universe& u) {
  std::string out;
  for (const MultiSegment& f : r.factors()) {
    if (!out.empty()) out += "*";
    out += "(" + format_multisegment(f, u) + ")";
  }
  return out;
}

}  // namespace zelcalc
