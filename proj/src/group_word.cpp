#include "hyperbolic/group_word.hpp"

#include <cctype>

#include "hyperbolic/error.hpp"

namespace hyperbolic {

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  GroupWord parse_all() {
    GroupWord w = parse_word();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(1, static_cast<int>(pos_) + 1, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  GroupWord parse_word() {
    GroupWord w;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ',' || text_[pos_] == ']' || text_[pos_] == ')')
        return w;
      w = w * parse_factor();
    }
  }

  GroupWord parse_factor() {
    GroupWord base = parse_atom();
    if (!at('^')) return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") fail("expected integer exponent");
    const int power = std::stoi(digits);
    GroupWord unit = power < 0 ? base.inverse() : base;
    GroupWord out;
    for (int k = 0; k < std::abs(power); ++k) out = out * unit;
    return out;
  }

  GroupWord parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a generator");
    const char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      GroupWord x = parse_word();
      if (!at(',')) fail("expected ',' in commutator");
      ++pos_;
      GroupWord y = parse_word();
      if (!at(']')) fail("expected ']'");
      ++pos_;
      return commutator(x, y);
    }
    if (c == '(') {
      ++pos_;
      GroupWord x = parse_word();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return x;
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("expected a generator");
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return GroupWord::generator(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Letter> free_reduce(std::vector<Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter& l : letters) {
    if (!out.empty() && out.back().name == l.name && out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(std::move(l));
  }
  return out;
}

GroupWord::GroupWord(std::vector<Letter> letters) : letters_(free_reduce(std::move(letters))) {}

GroupWord GroupWord::parse(std::string_view text) { return WordParser(text).parse_all(); }

GroupWord GroupWord::generator(std::string name, int exponent) {
  return GroupWord({Letter{std::move(name), exponent < 0 ? -1 : 1}});
}

bool GroupWord::contains(std::string_view name) const {
  for (const Letter& l : letters_)
    if (l.name == name) return true;
  return false;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

GroupWord operator*(const GroupWord& lhs, const GroupWord& rhs) {
  std::vector<Letter> letters = lhs.letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return GroupWord(std::move(letters));
}

std::string GroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const Letter& l : letters_) {
    if (!s.empty()) s += ' ';
    s += l.name;
    if (l.exponent < 0) s += "^-1";
  }
  return s;
}

bool words_equal(const GroupWord& u, const GroupWord& v) { return u.letters() == v.letters(); }

GroupWord cyclically_reduce(const GroupWord& w) {
  const auto& l = w.letters();
  std::size_t i = 0, j = l.size();
  while (j - i >= 2 && l[i] == l[j - 1].inverse()) {
    ++i;
    --j;
  }
  return GroupWord(std::vector<Letter>(l.begin() + static_cast<std::ptrdiff_t>(i),
                                       l.begin() + static_cast<std::ptrdiff_t>(j)));
}

bool cyclically_equivalent(const GroupWord& u, const GroupWord& v, bool allow_inversion) {
  auto rotation_of = [](const std::vector<Letter>& a, const std::vector<Letter>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (std::size_t shift = 0; shift < a.size(); ++shift) {
      bool match = true;
      for (std::size_t k = 0; k < a.size() && match; ++k) match = a[(k + shift) % a.size()] == b[k];
      if (match) return true;
    }
    return false;
  };
  const GroupWord cu = cyclically_reduce(u);
  const GroupWord cv = cyclically_reduce(v);
  if (rotation_of(cu.letters(), cv.letters())) return true;
  return allow_inversion && rotation_of(cu.letters(), cv.inverse().letters());
}

GroupWord commutator(const GroupWord& x, const GroupWord& y) {
  return x.inverse() * y.inverse() * x * y;
}

GroupWord substitute(const GroupWord& w, const std::map<std::string, GroupWord>& images) {
  GroupWord out;
  for (const Letter& l : w.letters()) {
    const auto it = images.find(l.name);
    if (it == images.end())
      out = out * GroupWord::generator(l.name, l.exponent);
    else
      out = out * (l.exponent > 0 ? it->second : it->second.inverse());
  }
  return out;
}

int exponent_sum(const GroupWord& w, std::string_view name) {
  int sum = 0;
  for (const Letter& l : w.letters())
    if (l.name == name) sum += l.exponent;
  return sum;
}

}  // namespace hyperbolic
