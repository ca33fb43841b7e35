#pragma once

#include "lcsa/annihilation.hpp"

#include <functional>

namespace lcsa {

enum class GeoTag { W, K1n, E510, E36, E38 };

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Geometric basis keys (vector field components, forms, sl2 / F^2 parts) with
// polynomial coefficients in the x variables. Coefficients whose x-degree would
// exceed max_degree raise TruncationError.
struct GeoSpace {
    GeoTag tag = GeoTag::W;
    VarSpace xs;
    int nx = 0;
    std::vector<std::string> keys;
    std::vector<int> key_parity;
    int max_degree = 8;
};

using GeoElement = Vec;  // key -> coefficient polynomial in xs

GeoSpace geo_space(GeoTag tag, const VarSpec& spec, int max_degree);
GeoElement geo_bracket(const GeoSpace& G, const GeoElement& u, const GeoElement& v);
std::string geo_str(const GeoSpace& G, const GeoElement& u);
// divergence-free / closedness violations of the components that must satisfy them
std::vector<std::string> geo_invariants(const GeoSpace& G, const GeoElement& u);

std::optional<GeoTag> realization_tag(const Algebra& A);
GeoSpace realization_space(const AnnAlgebra& g, int max_degree);
GeoElement realize(const AnnAlgebra& g, const GeoSpace& G, const AnnElement& u);

using SymMap = std::function<GeoElement(const AnnSym&)>;
// All basis pairs with deg u + deg v <= dmax, images of the relations, the
// rank of each realized component and the geometric invariants. `map`
// replaces the built-in realization (mutation tests).
Report check_realization(const AnnAlgebra& g, int dmax, const SymMap& map = nullptr, int threads = 1);

}  // namespace lcsa
