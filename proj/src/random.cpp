#include "proxdeg/random.hpp"

#include <vector>

#include "proxdeg/errors.hpp"

namespace proxdeg {

PointSet sample_uniform(const Region& region, std::size_t m, RandomStream& stream) {
    if (!(region.area() > 0.0)) {
        throw ParameterError("sample_uniform: region has zero area");
    }
    std::vector<Point> pts;
    pts.reserve(m);
    switch (region.kind()) {
        case RegionKind::UnitSquare:
            for (std::size_t i = 0; i < m; ++i) {
                const double x = stream.uniform();
                const double y = stream.uniform();
                pts.emplace_back(x, y);
            }
            break;
        case RegionKind::RotatedSquare: {
            const Rect box = region.bounding_box();
            while (pts.size() < m) {
                const double x = box.xmin + (box.xmax - box.xmin) * stream.uniform();
                const double y = box.ymin + (box.ymax - box.ymin) * stream.uniform();
                const Point p(x, y);
                if (region.contains(p)) pts.push_back(p);
            }
            break;
        }
        case RegionKind::RectUnion: {
            const auto& rects = region.rects();
            const double total = region.area();
            for (std::size_t i = 0; i < m; ++i) {
                double pick = total * stream.uniform();
                std::size_t r = 0;
                while (r + 1 < rects.size() && pick >= rects[r].area()) {
                    pick -= rects[r].area();
                    ++r;
                }
                const Rect& rect = rects[r];
                const double x = rect.xmin + (rect.xmax - rect.xmin) * stream.uniform();
                const double y = rect.ymin + (rect.ymax - rect.ymin) * stream.uniform();
                pts.emplace_back(x, y);
            }
            break;
        }
    }
    return PointSet(std::move(pts), region);
}

}  // namespace proxdeg
