#include "flipcalc/hodge.hpp"

#include <algorithm>
#include <sstream>

namespace flipcalc::hodge {

namespace {

const Integer kZero = 0;

bool odd_degree(int p, int q) { return ((p + q) & 1) != 0; }

// Shared core of sym2/alt2. Distinct bidegree pairs contribute a*b to both
// the invariant and anti-invariant parts; a bidegree paired with itself splits
// m^2 into m(m+1)/2 and m(m-1)/2, which part gets which depends on parity.
HodgeDiamond swap_eigenspace(const HodgeDiamond& a, bool invariant) {
  const int n = a.dim();
  HodgeDiamond out(2 * n);
  std::vector<std::pair<int, int>> support;
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      if (a.at(p, q) != 0) support.emplace_back(p, q);
    }
  }
  for (std::size_t i = 0; i < support.size(); ++i) {
    const auto [p1, q1] = support[i];
    const Integer& m = a.at(p1, q1);
    const bool plus_half = odd_degree(p1, q1) != invariant;
    out.add(2 * p1, 2 * q1, plus_half ? Integer(m * (m + 1) / 2) : Integer(m * (m - 1) / 2));
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      const auto [p2, q2] = support[j];
      out.add(p1 + p2, q1 + q2, m * a.at(p2, q2));
    }
  }
  return out;
}

Integer json_to_integer(const nlohmann::json& v) {
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()), 10);
  if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()), 10);
  if (v.is_string()) return parse_integer(v.get<std::string>());
  throw ValidationError("diamond entry value must be an integer");
}

nlohmann::json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return nlohmann::json(static_cast<std::int64_t>(v.get_si()));
  return nlohmann::json(to_string(v));
}

}  // namespace

HodgeDiamond::HodgeDiamond(int dim) : dim_(dim) {
  if (dim < 0) throw DomainError("diamond dimension must be nonnegative");
  entries_.assign(static_cast<std::size_t>(dim + 1) * static_cast<std::size_t>(dim + 1), 0);
}

HodgeDiamond HodgeDiamond::point() {
  HodgeDiamond d(0);
  d.set(0, 0, 1);
  return d.validated();
}

HodgeDiamond HodgeDiamond::projective_space(int n) {
  HodgeDiamond d(n);
  for (int p = 0; p <= n; ++p) d.set(p, p, 1);
  return d.validated();
}

HodgeDiamond HodgeDiamond::curve(const Integer& genus) {
  if (genus < 0) throw DomainError("genus must be nonnegative");
  HodgeDiamond d(1);
  d.set(0, 0, 1);
  d.set(1, 0, genus);
  d.set(0, 1, genus);
  d.set(1, 1, 1);
  return d.validated();
}

const Integer& HodgeDiamond::at(int p, int q) const {
  if (p < 0 || q < 0 || p > dim_ || q > dim_) return kZero;
  return entries_[index(p, q)];
}

void HodgeDiamond::set(int p, int q, Integer value) {
  if (p < 0 || q < 0 || p > dim_ || q > dim_) {
    throw ValidationError("entry (" + std::to_string(p) + "," + std::to_string(q) +
                          ") outside [0," + std::to_string(dim_) + "]^2");
  }
  if (value < 0) throw ValidationError("Hodge numbers must be nonnegative");
  entries_[index(p, q)] = std::move(value);
  geometric_ = false;
}

void HodgeDiamond::add(int p, int q, const Integer& value) { set(p, q, at(p, q) + value); }

std::string HodgeDiamond::symmetry_violation() const {
  for (int p = 0; p <= dim_; ++p) {
    for (int q = 0; q <= dim_; ++q) {
      const std::string pq = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
      if (at(p, q) != at(q, p)) {
        return "Hodge symmetry fails at h^" + pq;
      }
      if (at(p, q) != at(dim_ - p, dim_ - q)) {
        return "Serre duality fails at h^" + pq;
      }
    }
  }
  return {};
}

HodgeDiamond HodgeDiamond::validated() const {
  if (auto msg = symmetry_violation(); !msg.empty()) throw ValidationError(msg);
  HodgeDiamond copy = *this;
  copy.geometric_ = true;
  return copy;
}

std::vector<Integer> HodgeDiamond::diagonal() const {
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(dim_ + 1));
  for (int p = 0; p <= dim_; ++p) out.push_back(at(p, p));
  return out;
}

bool HodgeDiamond::operator==(const HodgeDiamond& other) const {
  return dim_ == other.dim_ && entries_ == other.entries_;
}

HodgeDiamond direct_sum(const HodgeDiamond& a, const HodgeDiamond& b) {
  HodgeDiamond out(std::max(a.dim(), b.dim()));
  for (const HodgeDiamond* d : {&a, &b}) {
    for (int p = 0; p <= d->dim(); ++p) {
      for (int q = 0; q <= d->dim(); ++q) out.add(p, q, d->at(p, q));
    }
  }
  return out;
}

HodgeDiamond kunneth(const HodgeDiamond& a, const HodgeDiamond& b) {
  HodgeDiamond out(a.dim() + b.dim());
  for (int p1 = 0; p1 <= a.dim(); ++p1) {
    for (int q1 = 0; q1 <= a.dim(); ++q1) {
      if (a.at(p1, q1) == 0) continue;
      for (int p2 = 0; p2 <= b.dim(); ++p2) {
        for (int q2 = 0; q2 <= b.dim(); ++q2) {
          if (b.at(p2, q2) == 0) continue;
          out.add(p1 + p2, q1 + q2, a.at(p1, q1) * b.at(p2, q2));
        }
      }
    }
  }
  return out;
}

HodgeDiamond tate_twist(const HodgeDiamond& a, int i) {
  if (i < 0) throw DomainError("Tate twist must be nonnegative");
  HodgeDiamond out(a.dim() + i);
  for (int p = 0; p <= a.dim(); ++p) {
    for (int q = 0; q <= a.dim(); ++q) {
      if (a.at(p, q) != 0) out.set(p + i, q + i, a.at(p, q));
    }
  }
  return out;
}

HodgeDiamond sym2(const HodgeDiamond& a) { return swap_eigenspace(a, true); }

HodgeDiamond alt2(const HodgeDiamond& a) { return swap_eigenspace(a, false); }

HodgeDiamond hilbert_square(const HodgeDiamond& a) {
  if (a.dim() < 1) throw DomainError("Hilbert square needs dim >= 1");
  HodgeDiamond out = sym2(a);
  for (int i = 1; i < a.dim(); ++i) out = direct_sum(out, tate_twist(a, i));
  return out;
}

HodgeDiamond projective_bundle(const HodgeDiamond& base, int r_plus_1) {
  if (r_plus_1 < 1) throw DomainError("bundle rank must be positive");
  HodgeDiamond out(base.dim() + r_plus_1 - 1);
  for (int i = 0; i < r_plus_1; ++i) out = direct_sum(out, tate_twist(base, i));
  return out;
}

HodgeDiamond blowup(const HodgeDiamond& total, const HodgeDiamond& center, int c) {
  if (c < 2) throw DomainError("blowup codimension must be at least 2");
  if (center.dim() + c != total.dim()) {
    throw DomainError("blowup: center dim " + std::to_string(center.dim()) + " + codim " +
                      std::to_string(c) + " != " + std::to_string(total.dim()));
  }
  HodgeDiamond out = total;
  for (int i = 1; i < c; ++i) out = direct_sum(out, tate_twist(center, i));
  return out;
}

Integer hh0(const HodgeDiamond& a) {
  Integer sum = 0;
  for (int p = 0; p <= a.dim(); ++p) sum += a.at(p, p);
  return sum;
}

Integer euler_characteristic(const HodgeDiamond& a) {
  Integer sum = 0;
  for (int p = 0; p <= a.dim(); ++p) {
    for (int q = 0; q <= a.dim(); ++q) {
      if (odd_degree(p, q)) sum -= a.at(p, q);
      else sum += a.at(p, q);
    }
  }
  return sum;
}

nlohmann::json to_json(const HodgeDiamond& a) {
  nlohmann::json entries = nlohmann::json::array();
  for (int p = 0; p <= a.dim(); ++p) {
    for (int q = 0; q <= a.dim(); ++q) {
      if (a.at(p, q) != 0) entries.push_back({p, q, integer_to_json(a.at(p, q))});
    }
  }
  return {{"dim", a.dim()}, {"entries", entries}};
}

HodgeDiamond from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.at("dim").is_number_integer()) {
    throw ValidationError("diamond JSON needs an integer \"dim\"");
  }
  const auto dim = j.at("dim").get<std::int64_t>();
  if (dim < 0 || dim > 4096) throw ValidationError("diamond dim out of range");
  HodgeDiamond out(static_cast<int>(dim));
  if (!j.contains("entries")) return out;
  const auto& entries = j.at("entries");
  if (!entries.is_array()) throw ValidationError("\"entries\" must be an array");
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ValidationError("each entry must be [p, q, value]");
    }
    const auto p = e[0].get<std::int64_t>();
    const auto q = e[1].get<std::int64_t>();
    if (p < 0 || q < 0 || p > dim || q > dim) {
      throw ValidationError("entry index outside [0, dim]");
    }
    if (out.at(static_cast<int>(p), static_cast<int>(q)) != 0) {
      throw ValidationError("duplicate entry (" + std::to_string(p) + "," + std::to_string(q) +
                            ")");
    }
    out.set(static_cast<int>(p), static_cast<int>(q), json_to_integer(e[2]));
  }
  return out;
}

std::string render(const HodgeDiamond& a) {
  const int n = a.dim();
  std::size_t width = 1;
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) width = std::max(width, to_string(a.at(p, q)).size());
  }
  // Row s holds p + q = s (top row s = 2n); h^{p,q} sits in slot n - p + q.
  std::ostringstream out;
  for (int s = 2 * n; s >= 0; --s) {
    std::vector<std::string> slots(static_cast<std::size_t>(2 * n + 1));
    for (int p = std::max(0, s - n); p <= std::min(n, s); ++p) {
      slots[static_cast<std::size_t>(n - p + (s - p))] = to_string(a.at(p, s - p));
    }
    std::string line;
    for (const auto& v : slots) {
      line += std::string(width - v.size(), ' ');
      line += v;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace flipcalc::hodge
