#ifndef SKEINCALC_KAUFFMAN_HPP
#define SKEINCALC_KAUFFMAN_HPP

/*
 * Unoriented Kauffman engine and the mod-2 comparison with the
 * reverse-parallel Homfly invariant.
 *
 * Crossings carry four ports in counterclockwise cyclic order with the
 * under strand on ports (0,2) and the over strand on (1,3).  The engine
 * uses the four-term relation in the form
 *     D + switch(D) = z (ccw(D) + cw(D)),
 * removes curls with factor v^{-writhe-sign} (matching the oriented
 * engine) and circles with delta = (v + v^{-1})/z - 1.  Values are
 * empty-normalized; the unknot normalization divides one delta out.
 */

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "skeincalc/diagram.hpp"
#include "skeincalc/ring.hpp"
#include "skeincalc/skein.hpp"

namespace skc {

struct UnorientedDiagram {
    std::vector<int8_t> alive;  // per crossing
    std::vector<int32_t> mate;  // 4*crossing + slot -> partner port
    int free_circles = 0;

    int crossing_count() const;
    int new_crossing();
};

UnorientedDiagram forget_orientation(const PlanarDiagram& d);

enum class KauffmanNorm { empty, unknot };

class KauffmanEngine {
public:
    ZForm evaluate(const UnorientedDiagram& d, KauffmanNorm norm);
    size_t memo_size() const { return memo_.size(); }

private:
    ZForm eval_canonical(UnorientedDiagram d);
    std::map<std::vector<int32_t>, ZForm> memo_;
    std::mutex mutex_;
};

KauffmanEngine& shared_kauffman_engine();

ZForm kauffman_poly(const UnorientedDiagram& d, KauffmanNorm norm,
                    KauffmanEngine& eng = shared_kauffman_engine());

// (v + v^{-1}) z^{-1} - 1, the unoriented circle value
ZForm kauffman_delta();

// v -> v^2, z -> z^2
ZForm square_variables(const ZForm& p);

struct RudolphReport {
    std::string knot;
    int framing = 0;
    ZForm homfly_side;    // a_K((1),(1)) in z form, coefficients mod 2
    ZForm kauffman_side;  // (F_K/F_U) at v -> v^2, z -> z^2, mod 2
    bool equal = false;   // equal up to an overall v^{2k}
    int shift = 0;        // that k
};

RudolphReport rudolph_check(const FramedTangleKnot& k,
                            SkeinEngine& eng = shared_engine(),
                            KauffmanEngine& keng = shared_kauffman_engine());

}  // namespace skc

#endif
