#pragma once

#include <mutex>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/spectrum.hpp"

namespace ringlab::detail {

struct RingNode {
  RingDescriptor desc;
  Limits limits;
  Ring::Family family = Ring::Family::finite;
  FiniteRing::Ptr finite;
  std::shared_ptr<const SemilocalRing> semilocal;
  std::vector<Ring> factors;

  mutable std::once_flag spec_once;
  mutable std::shared_ptr<const SpectrumGraph> spec;
};

/// Same arithmetic, different descriptor.
Ring with_descriptor(const Ring& r, RingDescriptor desc);

/// quotient_ring with an explicit descriptor for the result.
Quotient quotient_with_descriptor(const Ring& A, const Ideal& I, std::optional<RingDescriptor> desc);

[[noreturn]] void size_error(const std::string& path, std::size_t size, std::size_t cap);

}  // namespace ringlab::detail
