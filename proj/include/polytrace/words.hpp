#pragma once
// Letters (sets of region indices), finite trace words, lasso words, and
// the word algebra: stutter reduction, concatenation, infinite repetition.

#include <string>
#include <vector>

namespace polytrace {

/// Sorted, duplicate-free set of 0-based region indices.
using letter = std::vector<int>;

letter letter_union(const letter& a, const letter& b);

/// Finite word of letters.
struct trace_word {
  std::vector<letter> letters;

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend bool operator==(const trace_word& a, const trace_word& b) {
    return a.letters == b.letters;
  }
};

/// Ultimately periodic word: prefix (possibly empty) followed by the loop
/// repeated forever; the loop is nonempty.
struct lasso_word {
  trace_word prefix;
  trace_word loop;

  /// Letter at an absolute position of the infinite word.
  const letter& at(size_t k) const {
    if (k < prefix.size()) return prefix.letters[k];
    return loop.letters[(k - prefix.size()) % loop.size()];
  }
};

/// Removes consecutive repetitions; first and last letters survive.
trace_word stutter_reduce(const trace_word& w);

trace_word word_concat(const trace_word& a, const trace_word& b);

/// The infinite repetition of a nonempty word, as a lasso with empty prefix.
lasso_word word_repeat(const trace_word& w);

/// "{g1,g3}" given the id table; "{}" for the empty letter.
std::string format_letter(const letter& l, const std::vector<std::string>& ids);

/// Letters joined by commas: "{g1},{g1,g2},{}".
std::string format_word(const trace_word& w, const std::vector<std::string>& ids);

}  // namespace polytrace
