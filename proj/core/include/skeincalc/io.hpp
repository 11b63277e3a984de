#ifndef SKEINCALC_IO_HPP
#define SKEINCALC_IO_HPP

/*
 * Rendering and serialization: fixed-layout coefficient tables (rows are
 * z- or s-powers descending, columns v-powers ascending), JSON documents
 * with a stable schema, and PD-code input.
 *
 * PD JSON: {"crossings": [{"x": [a,b,c,d], "sign": +-1}, ...],
 *           "open": {"bottom": l1, "top": l2}}        (open arc optional)
 * with x = [under-in, over-in, under-out, over-out] edge labels; every
 * label occurs exactly once as an input and once as an output.
 */

#include <string>

#include "skeincalc/annulus.hpp"
#include "skeincalc/diagram.hpp"
#include "skeincalc/invariants.hpp"
#include "skeincalc/kauffman.hpp"
#include "skeincalc/ring.hpp"
#include "skeincalc/skein.hpp"

namespace skc {

std::string render_table(const ZForm& p);
std::string render_table(const IntLaurent2& p);

std::string json_of(const ZForm& p);
std::string json_of(const IntLaurent2& p);
std::string json_of(const LambdaScalar& p);
std::string json_of(const SLaurent& p);
std::string json_of(const AnnulusElement& q);
std::string json_of(const InvariantReport& r);
std::string json_of(const RudolphReport& r);
std::string json_of(const MeridianCheckReport& r);
std::string json_of(const ResolutionTrace& t);

// closed diagram from PD JSON text
PlanarDiagram diagram_from_pd(const std::string& json_text);
// knot as a (1,1)-tangle; requires the "open" field
FramedTangleKnot knot_from_pd(const std::string& json_text, const std::string& name);

}  // namespace skc

#endif
