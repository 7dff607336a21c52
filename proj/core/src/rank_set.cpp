#include "injwords/rank_set.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace injwords {

RankSet::RankSet(std::vector<int> elements) : elems_(std::move(elements)) {
  for (int x : elems_)
    if (x < 1) throw std::invalid_argument("rank set element must be >= 1");
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

RankSet RankSet::from_mask(std::uint32_t mask) {
  std::vector<int> elems;
  for (int i = 0; mask >> i; ++i)
    if ((mask >> i) & 1u) elems.push_back(i + 1);
  RankSet s;
  s.elems_ = std::move(elems);
  return s;
}

std::uint32_t RankSet::to_mask() const {
  std::uint32_t mask = 0;
  for (int x : elems_) {
    if (x > 32) throw std::out_of_range("rank set element too large for mask");
    mask |= 1u << (x - 1);
  }
  return mask;
}

bool RankSet::contains(int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

int RankSet::max() const {
  if (elems_.empty()) throw std::logic_error("max of empty rank set");
  return elems_.back();
}

bool RankSet::within(int bound) const { return elems_.empty() || elems_.back() <= bound; }

RankSet RankSet::with(int x) const {
  auto e = elems_;
  e.push_back(x);
  return RankSet(std::move(e));
}

RankSet RankSet::without(int x) const {
  RankSet s;
  s.elems_.reserve(elems_.size());
  for (int y : elems_)
    if (y != x) s.elems_.push_back(y);
  return s;
}

std::string RankSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) os << ',';
    os << elems_[i];
  }
  os << '}';
  return os.str();
}

RankSet RankSet::parse(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw std::invalid_argument("unbalanced braces in rank set");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> elems;
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::string t;
    for (char c : tok)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) {
      if (body.find_first_not_of(" \t") == std::string::npos) continue;
      throw std::invalid_argument("empty element in rank set");
    }
    std::size_t pos = 0;
    int v = std::stoi(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("bad rank set token: " + tok);
    elems.push_back(v);
  }
  return RankSet(std::move(elems));
}

std::vector<RankSet> all_rank_sets(int n) {
  if (n < 0 || n > 31) throw std::invalid_argument("all_rank_sets: n out of range");
  std::vector<RankSet> out;
  out.reserve(std::size_t(1) << n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) out.push_back(RankSet::from_mask(mask));
  return out;
}

void for_each_subset(const RankSet& s, const std::function<void(const RankSet&)>& fn) {
  const auto& e = s.elements();
  const std::uint32_t k = static_cast<std::uint32_t>(e.size());
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> sub;
    for (std::uint32_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u) sub.push_back(e[i]);
    fn(RankSet(std::move(sub)));
  }
}

}  // namespace injwords
