#include "bq/sampling.hpp"

namespace bq {

std::vector<Point4> sample_polydisc(Rng& rng, int count) {
    if (count < 1) throw InvalidParameter("sample count must be >= 1");
    std::vector<Point4> pts(static_cast<std::size_t>(count));
    for (auto& p : pts) p = rng.polydisc_point();
    return pts;
}

}  // namespace bq
