#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ftc/finite_space.hpp"

namespace ftc {

using Simplex = std::vector<Point>;

/// Finite abstract simplicial complex given by its facets. Facets are sorted
/// vertex lists, sorted lexicographically; none contains another.
struct SimplicialComplex {
  std::vector<std::string> vertices;
  std::vector<Simplex> facets;

  int dimension() const;
  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

/// Normalizes and validates the facet list (drops duplicates, rejects nested
/// facets, unused vertices and ids out of range with ErrorCode::invalid_parameter).
SimplicialComplex make_complex(std::vector<std::string> vertices, std::vector<Simplex> facets);

/// Every nonempty face, ordered by size then lexicographically.
std::vector<Simplex> simplices(const SimplicialComplex& k);

/// Facets are the maximal chains of X.
SimplicialComplex order_complex(const FiniteSpace& x);

/// Simplices ordered by inclusion; labels like "{a0,b0}".
SpacePtr face_poset(const SimplicialComplex& k);

/// Sum over facets of (dim + 1)!: the facet count of the barycentric subdivision.
std::size_t barycentric_facet_count(const SimplicialComplex& k);

/// Cycle graph on n >= 3 vertices v0..v{n-1}.
SimplicialComplex cycle_complex(int n);

/// Number of vertices when K is a single cycle graph (1-dimensional, connected,
/// every vertex on exactly two edges).
std::optional<std::size_t> cycle_length(const SimplicialComplex& k);

/// `asc <V> <F>`, then one facet per line as space-separated vertex ids.
void write_asc(std::ostream& out, const SimplicialComplex& k);
SimplicialComplex read_asc(std::istream& in);
/// Throws ErrorCode::invalid_parameter for an empty complex, ErrorCode::io_error
/// when the file cannot be written.
void export_complex(const SimplicialComplex& k, const std::string& path);

/// Hasse diagram in DOT, edges from lower to higher.
std::string hasse_dot(const FiniteSpace& x);
void export_hasse_dot(const FiniteSpace& x, const std::string& path);

}  // namespace ftc
