#include "randdag/degree_policy.hpp"

#include <algorithm>

#include "randdag/errors.hpp"

namespace randdag {

DegreePolicy DegreePolicy::bounded(int d) {
  if (d < 0) throw MalformedInputError("degree policy: bound must be >= 0");
  return DegreePolicy(Kind::bounded, d, {});
}

DegreePolicy DegreePolicy::finite_set(std::vector<int> values) {
  if (values.empty())
    throw MalformedInputError("degree policy: empty degree set");
  for (int v : values)
    if (v < 0) throw MalformedInputError("degree policy: negative degree");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return DegreePolicy(Kind::finite_set, 0, std::move(values));
}

bool DegreePolicy::contains(int d) const {
  if (d < 0) return false;
  switch (kind_) {
    case Kind::all:
      return true;
    case Kind::positive:
      return d > 0;
    case Kind::bounded:
      return d <= bound_;
    case Kind::finite_set:
      return std::binary_search(set_.begin(), set_.end(), d);
  }
  return false;
}

std::vector<int> DegreePolicy::members_upto(int hi) const {
  std::vector<int> out;
  if (hi < 0) return out;
  switch (kind_) {
    case Kind::all:
      out.reserve(hi + 1);
      for (int d = 0; d <= hi; ++d) out.push_back(d);
      break;
    case Kind::positive:
      for (int d = 1; d <= hi; ++d) out.push_back(d);
      break;
    case Kind::bounded:
      for (int d = 0; d <= std::min(hi, bound_); ++d) out.push_back(d);
      break;
    case Kind::finite_set:
      for (int d : set_) {
        if (d > hi) break;
        out.push_back(d);
      }
      break;
  }
  return out;
}

DegreePolicy DegreePolicy::intersect_positive() const {
  switch (kind_) {
    case Kind::all:
      return positive();
    case Kind::positive:
      return *this;
    case Kind::bounded: {
      std::vector<int> vals;
      for (int d = 1; d <= bound_; ++d) vals.push_back(d);
      if (vals.empty())
        throw MalformedInputError("degree policy: no positive degrees");
      return finite_set(std::move(vals));
    }
    case Kind::finite_set: {
      std::vector<int> vals;
      for (int d : set_)
        if (d > 0) vals.push_back(d);
      if (vals.empty())
        throw MalformedInputError("degree policy: no positive degrees");
      return finite_set(std::move(vals));
    }
  }
  return positive();
}

std::string DegreePolicy::spec_string() const {
  switch (kind_) {
    case Kind::all:
      return "all";
    case Kind::positive:
      return "positive";
    case Kind::bounded:
      return "max:" + std::to_string(bound_);
    case Kind::finite_set: {
      std::string s = "set:";
      for (size_t i = 0; i < set_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(set_[i]);
      }
      return s;
    }
  }
  return "all";
}

DegreePolicy DegreePolicy::parse(std::string_view spec) {
  if (spec == "all") return all();
  if (spec == "positive") return positive();
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw MalformedInputError("degree policy: missing number");
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9')
        throw MalformedInputError("degree policy: bad number in spec");
      v = v * 10 + (c - '0');
      if (v > 1000000)
        throw MalformedInputError("degree policy: degree too large");
    }
    return v;
  };
  if (spec.substr(0, 4) == "max:") return bounded(parse_int(spec.substr(4)));
  if (spec.substr(0, 4) == "set:") {
    std::vector<int> vals;
    std::string_view rest = spec.substr(4);
    while (!rest.empty()) {
      size_t comma = rest.find(',');
      vals.push_back(parse_int(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return finite_set(std::move(vals));
  }
  throw MalformedInputError("degree policy: unknown spec '" +
                            std::string(spec) + "'");
}

bool DegreePolicy::operator==(const DegreePolicy& o) const {
  return kind_ == o.kind_ && bound_ == o.bound_ && set_ == o.set_;
}

}  // namespace randdag
