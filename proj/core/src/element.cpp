#include "ringlab/element.hpp"

#include "ringlab/error.hpp"

namespace ringlab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::descriptor: return "descriptor";
    case ErrorKind::encoding: return "encoding";
    case ErrorKind::size_cap: return "size-cap";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::no_decomposition: return "no-decomposition";
    case ErrorKind::no_lift: return "no-lift";
    case ErrorKind::arity: return "arity";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::input: return "input";
  }
  return "unknown";
}

Index Element::index() const {
  if (!is_index()) throw Error(ErrorKind::encoding, "expected a finite-ring element");
  return std::get<Index>(value);
}

const Fraction& Element::fraction() const {
  if (!is_fraction()) throw Error(ErrorKind::encoding, "expected a fraction element");
  return std::get<Fraction>(value);
}

const std::vector<Element>& Element::parts() const {
  if (!is_tuple()) throw Error(ErrorKind::encoding, "expected a product element");
  return std::get<std::vector<Element>>(value);
}

bool operator==(const Element& a, const Element& b) { return a.value == b.value; }

bool operator<(const Element& a, const Element& b) {
  if (a.value.index() != b.value.index()) return a.value.index() < b.value.index();
  if (a.is_index()) return a.index() < b.index();
  if (a.is_fraction()) return a.fraction() < b.fraction();
  const auto& x = a.parts();
  const auto& y = b.parts();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i] < y[i]) return true;
    if (y[i] < x[i]) return false;
  }
  return x.size() < y.size();
}

std::string to_string(const Element& e) {
  if (e.is_index()) return std::to_string(e.index());
  if (e.is_fraction()) {
    const auto& f = e.fraction();
    if (f.den == 1) return std::to_string(f.num);
    return std::to_string(f.num) + "/" + std::to_string(f.den);
  }
  std::string out = "(";
  const auto& parts = e.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += to_string(parts[i]);
  }
  return out + ")";
}

}  // namespace ringlab
