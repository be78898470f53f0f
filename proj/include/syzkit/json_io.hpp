#ifndef SYZKIT_JSON_IO_HPP
#define SYZKIT_JSON_IO_HPP

#include <json.hpp>

#include "syzkit/cycles.hpp"
#include "syzkit/fan.hpp"
#include "syzkit/gluing.hpp"
#include "syzkit/polytope.hpp"

namespace syzkit {

// All emitted JSON preserves insertion order so identical inputs produce
// byte-identical output.
using ojson = nlohmann::ordered_json;

// Rounds through "%.15g" so emitted floats carry exactly 15 significant
// digits regardless of the value's full binary expansion.
double round15(double x);

ojson to_json(const LatticeVec& v);          // [x, y]
ojson to_json(const Mat2& a);                // [[a,b],[c,d]]
ojson to_json(const Fan2D& fan);             // {"rays": [[x,y],...], "complete": bool}
ojson to_json(const MomentPolytope& p);      // {"facets": [...], "vertices": [...]}
ojson to_json(const MultiPoly& p);           // [{"exps": [...], "c": "decimal"}...]
ojson to_json(const GluingPolynomial& g);    // {"m": m, "coeff": [terms per z-power]}
ojson to_json(const PeriodResult& r, const CycleSpec& spec);
ojson to_json(const cplx& z);                // [re, im]

// Parses "x,y;x,y;..." ray lists (CLI input syntax).
std::vector<LatticeVec> parse_rays(const std::string& text);

}  // namespace syzkit

#endif
