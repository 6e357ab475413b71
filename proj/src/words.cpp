#include "polytrace/words.hpp"

#include "polytrace/rational.hpp"

#include <algorithm>

namespace polytrace {

letter letter_union(const letter& a, const letter& b) {
  letter out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

trace_word stutter_reduce(const trace_word& w) {
  trace_word out;
  for (const letter& l : w.letters) {
    if (out.letters.empty() || out.letters.back() != l) {
      out.letters.push_back(l);
    }
  }
  return out;
}

trace_word word_concat(const trace_word& a, const trace_word& b) {
  trace_word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

lasso_word word_repeat(const trace_word& w) {
  if (w.empty()) throw input_error("cannot repeat an empty word");
  return {trace_word{}, w};
}

std::string format_letter(const letter& l, const std::vector<std::string>& ids) {
  std::string out = "{";
  for (size_t i = 0; i < l.size(); ++i) {
    if (i) out += ',';
    out += ids.at(static_cast<size_t>(l[i]));
  }
  out += '}';
  return out;
}

std::string format_word(const trace_word& w, const std::vector<std::string>& ids) {
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ',';
    out += format_letter(w.letters[i], ids);
  }
  return out;
}

}  // namespace polytrace
