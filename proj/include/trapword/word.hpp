#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trapword {

/// The two-letter alphabet. Everything in this library lives over {a, b}.
enum class Letter : char { A = 'a', B = 'b' };

constexpr Letter other(Letter x) noexcept {
  return x == Letter::A ? Letter::B : Letter::A;
}
constexpr char to_char(Letter x) noexcept { return static_cast<char>(x); }

struct ParseError : std::invalid_argument {
  ParseError(const std::string& msg, int pos)
      : std::invalid_argument(msg), position(pos) {}
  int position;
};

/// Raised when two characterizations that must agree by theory disagree at
/// runtime. Always an implementation bug, never a data error.
struct InternalCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

/// A finite word over {a, b}. Positions are 0-based; length 0 is the empty
/// word. Comparison is lexicographic with a < b.
class Word {
 public:
  Word() = default;
  explicit Word(Letter x) : text_(1, to_char(x)) {}

  static Word parse(std::string_view text);           // alphabet a/b
  static Word parse_zero_one(std::string_view text);  // 0 -> a, 1 -> b

  int size() const noexcept { return static_cast<int>(text_.size()); }
  bool empty() const noexcept { return text_.empty(); }

  Letter operator[](int i) const {
    return static_cast<Letter>(text_[static_cast<std::size_t>(i)]);
  }
  Letter front() const { return (*this)[0]; }
  Letter back() const { return (*this)[size() - 1]; }

  Word prefix(int len) const { return Word(text_.substr(0, len)); }
  Word suffix(int len) const { return Word(text_.substr(text_.size() - len)); }
  Word factor(int pos, int len) const { return Word(text_.substr(pos, len)); }

  const std::string& str() const noexcept { return text_; }

  Word& operator+=(Letter x) {
    text_.push_back(to_char(x));
    return *this;
  }
  Word& operator+=(const Word& w) {
    text_ += w.text_;
    return *this;
  }
  friend Word operator+(Word lhs, Letter x) {
    lhs += x;
    return lhs;
  }
  friend Word operator+(Letter x, const Word& rhs) {
    Word w(x);
    w += rhs;
    return w;
  }
  friend Word operator+(Word lhs, const Word& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.text_ <=> b.text_;
  }

 private:
  explicit Word(std::string s) : text_(std::move(s)) {}
  std::string text_;
};

Word reverse(const Word& w);
Word complement(const Word& w);
bool is_palindrome(const Word& w);

/// All start positions of u in w, ascending, overlapping occurrences
/// included. The empty word occurs at every position 0..|w|.
std::vector<int> occurrences(const Word& w, const Word& u);
bool contains_factor(const Word& w, const Word& u);

/// b[i] = length of the longest border of the prefix of length i+1.
std::vector<int> border_array(const Word& w);
/// z[i] = length of the longest common prefix of w and w[i..); z[0] = |w|.
std::vector<int> z_array(const Word& w);

Word longest_border(const Word& w);  // rejects the empty word
int min_period(const Word& w);       // |w| - |longest border|

}  // namespace trapword
