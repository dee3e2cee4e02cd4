#include "odq/checks.hpp"
#include "odq/utf8.hpp"

namespace odq {

namespace {

std::u32string fold_all(std::u32string s) {
  for (auto& c : s) c = utf8::fold(c);
  return s;
}

}  // namespace

LikePattern::LikePattern(std::string_view source, bool case_insensitive)
    : source_(source), nocase_(case_insensitive) {
  std::u32string cps = utf8::decode(source);
  std::u32string literal;
  auto flush = [&] {
    if (literal.empty()) return;
    original_literals_.push_back(literal);
    atoms_.push_back({Atom::Kind::literal, nocase_ ? fold_all(literal) : literal});
    literal.clear();
  };
  for (std::size_t i = 0; i < cps.size(); ++i) {
    char32_t c = cps[i];
    if (c == U'\\') {
      if (i + 1 == cps.size()) throw PatternError("pattern ends with a dangling escape");
      char32_t e = cps[++i];
      if (e != U'%' && e != U'_' && e != U'\\') {
        throw PatternError("only %, _ and \\ may be escaped in a pattern");
      }
      literal.push_back(e);
    } else if (c == U'%') {
      flush();
      atoms_.push_back({Atom::Kind::any_sequence, {}});
    } else if (c == U'_') {
      flush();
      atoms_.push_back({Atom::Kind::any_one, {}});
    } else {
      literal.push_back(c);
    }
  }
  flush();
}

std::string LikePattern::decompile() const {
  std::string out;
  std::size_t lit = 0;
  for (const auto& a : atoms_) {
    switch (a.kind) {
      case Atom::Kind::any_sequence: out.push_back('%'); break;
      case Atom::Kind::any_one: out.push_back('_'); break;
      case Atom::Kind::literal:
        for (char32_t c : original_literals_[lit]) {
          if (c == U'%' || c == U'_' || c == U'\\') out.push_back('\\');
          utf8::append(out, c);
        }
        ++lit;
        break;
    }
  }
  return out;
}

// Iterative matcher with single-point backtracking to the most recent `%`.
// Each atom is a literal run, so on mismatch we retry the atoms after the last
// `%` one code point further along the value.
bool LikePattern::matches(std::string_view value) const {
  std::u32string text = utf8::decode(value);
  if (nocase_) text = fold_all(std::move(text));

  std::size_t ti = 0, ai = 0;
  std::size_t star_atom = SIZE_MAX, star_text = 0;
  const std::size_t n = text.size();
  while (true) {
    bool advanced = false;
    if (ai < atoms_.size()) {
      const Atom& a = atoms_[ai];
      switch (a.kind) {
        case Atom::Kind::any_sequence:
          star_atom = ai++;
          star_text = ti;
          advanced = true;
          break;
        case Atom::Kind::any_one:
          if (ti < n) {
            ++ti;
            ++ai;
            advanced = true;
          }
          break;
        case Atom::Kind::literal:
          if (n - ti >= a.text.size() && text.compare(ti, a.text.size(), a.text) == 0) {
            ti += a.text.size();
            ++ai;
            advanced = true;
          }
          break;
      }
    } else if (ti == n) {
      return true;
    }
    if (advanced) continue;
    if (star_atom == SIZE_MAX || star_text >= n) return false;
    ai = star_atom + 1;
    ti = ++star_text;
  }
}

bool match_like(std::string_view value, const LikePattern& pattern) { return pattern.matches(value); }

}  // namespace odq
