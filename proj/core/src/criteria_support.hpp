#pragma once

// Clause primitives shared by the criteria matrices. Each primitive handles
// finite and semilocal rings directly and combines factor results for the
// product family.

#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/spectrum.hpp"
#include "ringlab/topology.hpp"

namespace ringlab::detail {

/// Elements standing in for "every f in A": all elements of a finite ring;
/// the integers 0..prod(P) of a semilocal ring (every residue pattern, plus a
/// nonzero multiple of every prime); tuples of factor samples for products.
std::vector<Element> element_sample(const Ring& A);

/// Ideals standing in for "every ideal of A": all ideals of a finite ring
/// within the enumeration cap; zero and the squarefree principal ideals of a
/// semilocal ring; componentwise tuples for products. nullopt over the cap.
std::optional<std::vector<Ideal>> ideal_family(const Ring& A);

/// f outside p and g outside q with fg = 0.
std::optional<std::pair<Element, Element>> zero_product_witness(const Ring& A, std::size_t p, std::size_t q);

/// An s outside p with 1 - bs outside Ker pi_p for every b (nullopt when A -> A_p is onto).
std::optional<Element> localization_obstruction(const Ring& A, std::size_t p);

/// An f with no g such that f - f^2 g is nilpotent (nullopt when A/N is absolutely flat).
std::optional<Element> absolutely_flat_obstruction(const Ring& A);

/// An f with no g, h making (1 + fg)(1 + (1 - f)h) = 0.
std::optional<Element> gelfand_identity_obstruction(const Ring& A);

/// f in Ker pi_m with 1 - f in Ker pi_n.
std::optional<Element> complementary_kernel_element(const Ring& A, std::size_t m, std::size_t n);

/// Zero divisors of A_p when it is not a domain; the first member is null when A_p is the zero ring.
std::optional<std::pair<nlohmann::json, nlohmann::json>> localization_domain_obstruction(const Ring& A, std::size_t p);

/// A localization with an idempotent that is not the image of an idempotent of A.
std::optional<nlohmann::json> localization_lifting_obstruction(const Ring& A);

/// Classes of the equivalence generated by p + q != A.
std::vector<PointSet> ring_r_classes(const Ring& A);

/// Precomputed annihilator rows of a finite ring: ann[f] = Ann(f).
std::vector<Bitset> annihilator_rows(const FiniteRing& R);

nlohmann::json elem(const Ring& A, const Element& e);
nlohmann::json pt(const Ring& A, std::size_t id);

}  // namespace ringlab::detail
