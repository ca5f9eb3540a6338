#include "fanolink/link_records.hpp"

#include <vector>

namespace fanolink {

std::span<const LinkRecord> link_records() {
  static const std::vector<LinkRecord> records = [] {
    std::vector<LinkRecord> v = {
        {"L.1", 1, 3, 5, 2, find_target(4, 1), {2, -1}, 1,
         {1, "a line on X (projection from the line)"}, "smooth quintic of genus 2"},
        {"L.2", 1, 3, 4, 0, find_target(5, 1), {2, -1}, 1,
         {1, "a conic on X (projection from its plane)"}, "smooth rational quartic"},
        {"L.3", 1, 2, 2, 0, find_target(2, 0), {1, -1}, 2,
         {1, "a point of X (projection from the point)"}, "smooth conic"},
        {"L.4", 1, 3, 5, 1, find_target(2, 0), {5, -2}, 1,
         {2, "an elliptic quintic C5 on X (quadric sections through C5)"},
         "smooth elliptic quintic"},
        {"L.5", 1, 3, 6, 3, find_target(1, 0), {8, -3}, 1,
         {3, "a sextic of genus 3 (cubics through it)"},
         "smooth ACM sextic of genus 3"},
    };
    for (const auto& l : v) validate_link_record(l);
    return v;
  }();
  return records;
}

const LinkRecord& find_link(std::string_view id) {
  for (const auto& l : link_records()) {
    if (l.id == id) return l;
  }
  throw Error(ErrorCode::UnknownLink, "unknown link '" + std::string(id) + "'");
}

void validate_link_record(const LinkRecord& link) {
  const DivisorClass f = q_exceptional_class<Int>(link.n, link.m, link.target.r, link.a_f);
  if (!(f == link.f)) {
    throw Error(ErrorCode::CatalogInconsistent, link.id + ": F does not match K_Z - q^*K_X");
  }
  if (cube(link.h_z(), link.geometry()) != link.target.d0) {
    throw Error(ErrorCode::CatalogInconsistent, link.id + ": (nH-mE)^3 != d0");
  }
  basis_change(link.frame());
}

}  // namespace fanolink
