#pragma once

#include <string>
#include <vector>

namespace pfolia {

// Worked examples from the classification, re-verified by direct computation.
struct GalleryVerdict {
    std::string id;
    std::string what;
    bool pass = false;
    std::string detail; // filled on failure
};

// ids: c3.2a, c2.1a, c2.2a, curve-fields, d0, local-coordinate
std::vector<std::string> gallery_ids();
GalleryVerdict run_gallery_item(const std::string& id); // throws ConstraintError on unknown id
std::vector<GalleryVerdict> run_gallery();

} // namespace pfolia
