#include "affmon/extnat.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

namespace affmon {

ExtNat::ExtNat(Integer value) : value_(std::move(value)) {
  if (value_ < 0) throw std::invalid_argument("ExtNat: negative value " + value_.str());
}

const Integer& ExtNat::value() const {
  if (infinite_) throw std::domain_error("ExtNat: value() of infinity");
  return value_;
}

ExtNat& ExtNat::operator+=(const ExtNat& other) {
  if (infinite_ || other.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ += other.value_;
  }
  return *this;
}

ExtNat operator*(const Integer& c, const ExtNat& x) {
  if (c < 0) throw std::invalid_argument("ExtNat: negative scalar");
  if (c == 0) return ExtNat{};
  if (x.infinite_) return ExtNat::infinity();
  return ExtNat(c * x.value_);
}

bool ExtNat::in_multiples_of(const Integer& m) const {
  return infinite_ || value_ % m == 0;
}

std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtNat::to_string() const { return infinite_ ? "inf" : value_.str(); }

ExtNat ExtNat::parse(std::string_view token) {
  if (token == "inf") return infinity();
  if (token.empty() ||
      !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("not a value of N0*: '" + std::string(token) + "'");
  return ExtNat(Integer(std::string(token)));
}

std::ostream& operator<<(std::ostream& os, const ExtNat& x) { return os << x.to_string(); }

IndexSet make_index_set(std::vector<std::size_t> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

IndexSet full_index_set(std::size_t k) {
  IndexSet s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  return s;
}

bool contains(const IndexSet& s, std::size_t i) {
  return std::binary_search(s.begin(), s.end(), i);
}

bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet complement(const IndexSet& s, std::size_t k) {
  return set_difference(full_index_set(k), s);
}

IndexSet index_set_from_mask(unsigned long mask, std::size_t k) {
  IndexSet s;
  for (std::size_t i = 0; i < k; ++i)
    if (mask & (1UL << i)) s.push_back(i);
  return s;
}

std::string to_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

IndexSet parse_index_set(std::string_view text, std::size_t k) {
  std::vector<std::size_t> items;
  std::string cleaned;
  for (char c : text)
    if (c != '{' && c != '}' && c != ' ') cleaned += c;
  std::size_t pos = 0;
  while (pos < cleaned.size()) {
    const auto comma = cleaned.find(',', pos);
    const auto piece = cleaned.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || value == 0 || value > k)
      throw std::invalid_argument("bad index set '" + std::string(text) + "'");
    items.push_back(value - 1);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return make_index_set(std::move(items));
}

DimVector DimVector::from_integers(const IntVector& v) {
  DimVector out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = ExtNat(v(i));
  return out;
}

bool DimVector::is_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const ExtNat& x) { return x.is_finite(); });
}

IntVector DimVector::to_integers() const {
  IntVector v(static_cast<Eigen::Index>(entries_.size()));
  for (std::size_t i = 0; i < entries_.size(); ++i) v(static_cast<Eigen::Index>(i)) = entries_[i].value();
  return v;
}

DimVector& DimVector::operator+=(const DimVector& other) {
  require_same_size(size(), other.size(), "DimVector addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

std::string DimVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ' ';
    out += entries_[i].to_string();
  }
  return out;
}

DimVector DimVector::parse(std::string_view text) {
  std::vector<ExtNat> entries;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) entries.push_back(ExtNat::parse(token));
  return DimVector(std::move(entries));
}

std::ostream& operator<<(std::ostream& os, const DimVector& x) { return os << '(' << x.to_string() << ')'; }

void require_same_size(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (expected " +
                                std::to_string(expected) + ", got " + std::to_string(actual) + ")");
}

SupportData support_data(const DimVector& x) {
  SupportData d;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) d.support.push_back(i);
    if (x[i].is_infinite()) d.infinite_support.push_back(i);
  }
  return d;
}

IndexSet support(const DimVector& x) { return support_data(x).support; }
IndexSet infinite_support(const DimVector& x) { return support_data(x).infinite_support; }

DimVector star(const DimVector& x) {
  DimVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].is_infinite()) out[i] = ExtNat::infinity();
  return out;
}

DimVector inf_scale(const DimVector& x) {
  DimVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out[i] = ExtNat::infinity();
  return out;
}

DimVector pattern_vector(std::size_t k, const IndexSet& pattern) {
  DimVector out(k);
  for (auto i : pattern) out[i] = ExtNat::infinity();
  return out;
}

bool componentwise_leq(const DimVector& a, const DimVector& b) {
  require_same_size(a.size(), b.size(), "componentwise_leq");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] < a[i]) return false;
  return true;
}

DimVector project_out(const DimVector& x, const IndexSet& removed) {
  std::vector<ExtNat> kept;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!contains(removed, i)) kept.push_back(x[i]);
  return DimVector(std::move(kept));
}

IntVector project_out(const IntVector& x, const IndexSet& removed) {
  IntVector out(x.size() - static_cast<Eigen::Index>(removed.size()));
  Eigen::Index j = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!contains(removed, static_cast<std::size_t>(i))) out(j++) = x(i);
  return out;
}

IntMatrix drop_columns(const IntMatrix& m, const IndexSet& removed) {
  IntMatrix out(m.rows(), m.cols() - static_cast<Eigen::Index>(removed.size()));
  Eigen::Index j = 0;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (!contains(removed, static_cast<std::size_t>(c))) out.col(j++) = m.col(c);
  return out;
}

IntMatrix insert_zero_columns(const IntMatrix& m, const IndexSet& inserted, std::size_t k) {
  require_same_size(k - inserted.size(), static_cast<std::size_t>(m.cols()), "insert_zero_columns");
  IntMatrix out = IntMatrix::Zero(m.rows(), static_cast<Eigen::Index>(k));
  Eigen::Index j = 0;
  for (std::size_t c = 0; c < k; ++c)
    if (!contains(inserted, c)) out.col(static_cast<Eigen::Index>(c)) = m.col(j++);
  return out;
}

}  // namespace affmon
