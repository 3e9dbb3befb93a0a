#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/ideal.hpp"
#include "ringlab/poly.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct CleanDecomposition {
  Element idempotent;
  Element unit;
};

/// f = e + u with the smallest idempotent e making f - e a unit.
/// Throws ErrorKind::no_decomposition naming f when none exists.
CleanDecomposition clean_decompose(const Ring& A, const Element& f);

/// Greatest idempotent (under ef = e) with e in Af and 1 - e in A(1 - f).
Element exchange_idempotent(const Ring& A, const Element& f);

struct IdempotentLift {
  Element idempotent;
  bool newton = false;            // I inside the nilradical
  unsigned steps = 0;             // Newton updates applied
  unsigned step_bound = 0;        // ceil(log2 k) + 1, k the nilpotency index of f^2 - f
  std::vector<Element> iterates;  // e_0 = f, e_1, ...
};

/// Idempotent e with f - e in I. Requires f^2 - f in I.
IdempotentLift lift_idempotent(const Ring& A, const Ideal& I, const Element& f);

/// Finite A as the product of its localizations at maximal ideals.
struct CrtDecomposition {
  std::vector<std::size_t> maximal_ids;
  std::vector<Ring> factors;
  Ring product;                             // flattened product of the factors
  std::vector<Index> forward;               // a -> encoding in product
  std::vector<Index> inverse;               // product encoding -> a
};

CrtDecomposition crt_decomposition(const Ring& A);
/// Empty when forward is a bijective ring map with inverse as its inverse.
std::optional<std::string> crt_defect(const Ring& A, const CrtDecomposition& d);

enum class GluingMode { max, min };
std::string to_string(GluingMode m);

struct GluingPart {
  std::size_t point = 0;  // spectrum id
  Element idempotent;
  Ring factor;
  RingMap map;
  std::vector<Index> lift;  // smallest preimage of each factor element
};

/// Orthogonal idempotents summing to one, one per local factor.
struct GluingPlan {
  Ring ring;
  GluingMode mode = GluingMode::max;
  std::vector<GluingPart> parts;
};

GluingPlan build_gluing_plan(const Ring& A, GluingMode mode);

/// Sum over k of e_k times the lift of the k-th local solution; verified over A.
std::vector<Element> glue_solutions(const GluingPlan& plan, const PolySystem& sys,
                                    const std::vector<std::vector<Element>>& local);

/// Lexicographically smallest solution over a finite ring.
std::optional<std::vector<Element>> brute_force_solve(const PolySystem& sys);

struct LocalGlobalResult {
  GluingPlan plan;
  std::vector<std::optional<std::vector<Element>>> local;
  std::optional<std::vector<Element>> solution;
};

LocalGlobalResult solve_local_global(const Ring& A, const PolySystem& sys);
nlohmann::json to_json(const LocalGlobalResult& r);

/// Smallest idempotent e with f = fe and g = g(1 - e). Requires fg = 0.
std::optional<Element> purify_witness(const Ring& A, const Element& f, const Element& g);

}  // namespace ringlab
