#pragma once

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hyperbolic {

struct Letter {
  std::string name;
  int exponent;  // +1 or -1

  Letter inverse() const { return {name, -exponent}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Element of a free group, always kept freely reduced.
class GroupWord {
 public:
  GroupWord() = default;
  /// Reduces the given letters.
  explicit GroupWord(std::vector<Letter> letters);

  /// Whitespace-separated factors: a generator `x`, an inverse `x^-1`, a
  /// power `x^n`, or a bracket `[u,v]` of nested words. "1" is the identity.
  static GroupWord parse(std::string_view text);
  static GroupWord generator(std::string name, int exponent = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool contains(std::string_view name) const;

  GroupWord inverse() const;
  friend GroupWord operator*(const GroupWord& lhs, const GroupWord& rhs);

  /// Letters joined by spaces with `^-1` for inverses; "1" when empty.
  std::string to_string() const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend std::ostream& operator<<(std::ostream& os, const GroupWord& w) {
    return os << w.to_string();
  }

 private:
  std::vector<Letter> letters_;
};

/// Cancels adjacent inverse pairs until none remain.
std::vector<Letter> free_reduce(std::vector<Letter> letters);

/// Equality of freely reduced forms.
bool words_equal(const GroupWord& u, const GroupWord& v);

/// Cyclic reduction: strips inverse pairs from the two ends.
GroupWord cyclically_reduce(const GroupWord& w);

/// u and v are conjugate (cyclic rotations of each other after cyclic
/// reduction); with allow_inversion, v^-1 is also tried.
bool cyclically_equivalent(const GroupWord& u, const GroupWord& v, bool allow_inversion = true);

/// [x, y] = x^-1 y^-1 x y.
GroupWord commutator(const GroupWord& x, const GroupWord& y);

/// Replaces every occurrence of each mapped generator g^e by image(g)^e.
GroupWord substitute(const GroupWord& w, const std::map<std::string, GroupWord>& images);

/// Sum of exponents of `name` in w.
int exponent_sum(const GroupWord& w, std::string_view name);

}  // namespace hyperbolic
