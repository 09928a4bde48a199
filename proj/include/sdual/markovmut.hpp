#pragma once

#include <vector>

#include "sdual/numeric.hpp"

namespace sdual {

/// Positive solution of x^2 + y^2 + z^2 = 3xyz. The identity is re-checked
/// on every construction.
struct MarkovTriple {
  Int x, y, z;
  MarkovTriple(Int x_, Int y_, Int z_);
};

bool operator==(const MarkovTriple& a, const MarkovTriple& b);

enum class Slot { x, y, z };

/// Replace the chosen coordinate v by 3*(product of the other two) - v,
/// the second root of the quadratic in that coordinate. An involution.
MarkovTriple mutate(const MarkovTriple& t, Slot slot);

/// Coordinates sorted descending.
MarkovTriple canonical(const MarkovTriple& t);

/// Every triple (canonical form) with all entries <= max_value, each exactly
/// once, by breadth-first search of the mutation tree from (1,1,1). Sorted
/// descending lexicographically ascending.
std::vector<MarkovTriple> enumerate_triples(const Int& max_value);

/// Rank/degree/discriminant data of the n-th exceptional bundle on the
/// projective plane. (rank, -c1, 1) is a Markov triple; c2 is pinned by the
/// zero-dimensional moduli condition
///   2 rank c2 - (rank - 1) c1^2 - rank^2 + 1 = 0,
/// which must divide exactly.
struct ExceptionalDatum {
  long long n;
  Int rank;
  Int c1;
  Int c2;
  ExceptionalDatum(long long n_, Int rank_, Int c1_);
};

/// Terms n_min..n_max of the sequence. Seeds: index 1 is (2,-1) with
/// index 0 = (1,-1) and index -1 = (1,-2) (the line bundles O(-1), O(-2));
/// forward recurrence next = (3 rank + c1, -rank), backward its inverse.
std::vector<ExceptionalDatum> exceptional_sequence(long long n_min, long long n_max);

/// Single term.
ExceptionalDatum exceptional_term(long long n);

/// Exact-triple bookkeeping for (E_{n-1}, E_n, E_{n+1}): the Hom dimension
/// h is forced by rank additivity h*rank_n = rank_{n-1} + rank_{n+1} and must
/// be 3, with the same additivity for c1.
struct MutationTripleReport {
  long long n = 0;
  Int h;
  bool rank_ok = false;
  bool c1_ok = false;
  bool pass = false;
};

MutationTripleReport verify_mutation_triple(long long n);

}  // namespace sdual
