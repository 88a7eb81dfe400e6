#include "egz/sequence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace egz {

namespace {

void require_same_group(const Sequence& a, const Sequence& b) {
  if (!(a.group() == b.group())) {
    throw std::invalid_argument("sequences belong to different groups");
  }
}

}  // namespace

Sequence Sequence::parse(const Group& g, std::string_view text) {
  Sequence s(g);
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::string name = token;
    long long count = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      std::string count_str = token.substr(caret + 1);
      if (count_str.empty() || count_str.size() > 6 ||
          count_str.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("malformed multiplicity '" + count_str + "'");
      }
      count = std::stoll(count_str);
    }
    auto e = g.find_element(name);
    if (!e) {
      throw std::invalid_argument("unknown element '" + name + "' in " + g.descriptor());
    }
    s.add(*e, static_cast<int>(count));
  }
  return s;
}

std::string Sequence::str() const {
  std::string out;
  for (Elem e = 0; e < group_.order(); ++e) {
    if (mult_[e] == 0) continue;
    if (!out.empty()) out += ' ';
    out += group_.name(e);
    if (mult_[e] > 1) {
      out += '^';
      out += std::to_string(mult_[e]);
    }
  }
  return out;
}

Sequence& Sequence::add(Elem g, int count) {
  if (count < 0) throw std::invalid_argument("negative multiplicity");
  mult_[g] += count;
  length_ += count;
  return *this;
}

ElemMask Sequence::support_mask() const {
  ElemMask m = 0;
  for (Elem e = 0; e < group_.order(); ++e)
    if (mult_[e] > 0) m |= 1ull << e;
  return m;
}

int Sequence::support_size() const {
  int c = 0;
  for (int v : mult_) c += v > 0;
  return c;
}

int Sequence::max_multiplicity() const {
  return mult_.empty() ? 0 : *std::max_element(mult_.begin(), mult_.end());
}

Sequence Sequence::inverse_terms() const {
  Sequence out(group_);
  for (Elem e = 0; e < group_.order(); ++e)
    if (mult_[e] > 0) out.add(group_.inverse(e), mult_[e]);
  return out;
}

Sequence Sequence::restricted(ElemMask mask) const {
  Sequence out(group_);
  for (Elem e = 0; e < group_.order(); ++e)
    if (mult_[e] > 0 && ((mask >> e) & 1)) out.add(e, mult_[e]);
  return out;
}

std::vector<Elem> Sequence::to_elements() const {
  std::vector<Elem> out;
  out.reserve(length_);
  for (Elem e = 0; e < group_.order(); ++e)
    out.insert(out.end(), mult_[e], e);
  return out;
}

bool Sequence::operator<(const Sequence& other) const {
  auto a = to_elements();
  auto b = other.to_elements();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Sequence combine(const Sequence& s, const Sequence& t) {
  require_same_group(s, t);
  Sequence out = s;
  for (Elem e = 0; e < s.group().order(); ++e)
    if (t.multiplicity(e) > 0) out.add(e, t.multiplicity(e));
  return out;
}

bool divides(const Sequence& t, const Sequence& s) {
  require_same_group(s, t);
  for (Elem e = 0; e < s.group().order(); ++e)
    if (t.multiplicity(e) > s.multiplicity(e)) return false;
  return true;
}

Sequence remove(const Sequence& s, const Sequence& t) {
  if (!divides(t, s)) {
    throw std::invalid_argument("cannot remove: not a subsequence");
  }
  Sequence out(s.group());
  for (Elem e = 0; e < s.group().order(); ++e)
    out.add(e, s.multiplicity(e) - t.multiplicity(e));
  return out;
}

}  // namespace egz
