// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/pipeline/placement.h"

#include <algorithm>
#include <cmath>

#include "posediv/error.h"

namespace posediv {
namespace {

// Twice the center y, to stay in integers.
int LowerKey(const Box& b, LowerRule rule) {
  return rule == LowerRule::kBottomEdge ? b.Bottom() : 2 * b.y + b.h;
}

Box RandomBox(SizeEntry size, int canvas_width, int canvas_height, Rng& rng) {
  std::uniform_int_distribution<int> px(0, canvas_width - size.width);
  std::uniform_int_distribution<int> py(0, canvas_height - size.height);
  const int x = px(rng);
  const int y = py(rng);
  return Box{x, y, size.width, size.height};
}

// Uniform over the positions of a box of `size` that overlap `other`. This is
// the distribution rejection sampling on overlap would give, without the
// rejections; x and y overlap are independent events.
Box OverlappingBox(SizeEntry size, const Box& other, int canvas_width,
                   int canvas_height, Rng& rng) {
  std::uniform_int_distribution<int> px(std::max(0, other.x - size.width + 1),
                                        std::min(canvas_width - size.width, other.Right() - 1));
  std::uniform_int_distribution<int> py(std::max(0, other.y - size.height + 1),
                                        std::min(canvas_height - size.height, other.Bottom() - 1));
  const int x = px(rng);
  const int y = py(rng);
  return Box{x, y, size.width, size.height};
}

void CheckFits(SizeEntry size, int canvas_width, int canvas_height) {
  if (canvas_width <= 0 || canvas_height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "canvas must be non-empty");
  }
  if (size.width > canvas_width || size.height > canvas_height) {
    throw Error(ErrorCode::kPlacement, "scaled human does not fit the canvas");
  }
}

// Nearest-neighbour lookup of a placed mask at canvas pixel (x, y).
bool PlacedBit(const HumanPlacement& h, const BinaryMask& mask, const Box& bbox,
               int x, int y) {
  if (x < h.box.x || y < h.box.y || x >= h.box.Right() || y >= h.box.Bottom()) {
    return false;
  }
  const int mx = bbox.x + std::min(bbox.w - 1, (x - h.box.x) * bbox.w / h.box.w);
  const int my = bbox.y + std::min(bbox.h - 1, (y - h.box.y) * bbox.h / h.box.h);
  return mask.Get(mx, my);
}

}  // namespace

double ResizeFactor(const BinaryMask& mask, std::span<const SizeEntry> size_table,
                    Rng& rng) {
  const std::optional<Box> bbox = mask.BoundingBox();
  if (!bbox) {
    throw Error(ErrorCode::kInvalidArgument, "resize factor of an empty mask");
  }
  if (size_table.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "size table is empty");
  }
  std::uniform_int_distribution<std::size_t> pick(0, size_table.size() - 1);
  const SizeEntry& entry = size_table[pick(rng)];
  if (entry.width <= 0 || entry.height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "size table entries must be positive");
  }
  return static_cast<double>(entry.LongerSide()) / std::max(bbox->w, bbox->h);
}

SizeEntry ScaledHuman::ScaledSize() const {
  const std::optional<Box> bbox = mask.BoundingBox();
  if (!bbox) throw Error(ErrorCode::kInvalidArgument, "human mask is empty");
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::kInvalidArgument, "scale must be positive");
  }
  return {std::max(1, static_cast<int>(std::lround(bbox->w * scale))),
          std::max(1, static_cast<int>(std::lround(bbox->h * scale)))};
}

PlacementSpec PlaceWithOcclusion(const ScaledHuman& a, const ScaledHuman& b,
                                 int canvas_width, int canvas_height, Rng& rng,
                                 const PlacementOptions& options,
                                 const std::string& background_ref) {
  const SizeEntry sa = a.ScaledSize();
  const SizeEntry sb = b.ScaledSize();
  CheckFits(sa, canvas_width, canvas_height);
  CheckFits(sb, canvas_width, canvas_height);
  for (int attempt = 0; attempt < options.max_tries; ++attempt) {
    const Box box_a = RandomBox(sa, canvas_width, canvas_height, rng);
    const Box box_b = OverlappingBox(sb, box_a, canvas_width, canvas_height, rng);
    const int key_a = LowerKey(box_a, options.lower_rule);
    const int key_b = LowerKey(box_b, options.lower_rule);
    if (key_a == key_b) continue;
    HumanPlacement pa{a.ref, box_a, a.scale, 0};
    HumanPlacement pb{b.ref, box_b, b.scale, 0};
    PlacementSpec spec{background_ref, canvas_width, canvas_height, {}};
    if (key_a > key_b) {
      pa.z_order = 1;
      spec.humans = {pb, pa};
    } else {
      pb.z_order = 1;
      spec.humans = {pa, pb};
    }
    return spec;
  }
  throw Error(ErrorCode::kPlacement,
              "no placement with a strictly lower occluder after " +
                  std::to_string(options.max_tries) + " tries");
}

PlacementSpec PlaceSingle(const ScaledHuman& human, int canvas_width,
                          int canvas_height, Rng& rng,
                          const std::string& background_ref) {
  const SizeEntry size = human.ScaledSize();
  CheckFits(size, canvas_width, canvas_height);
  return PlacementSpec{background_ref, canvas_width, canvas_height,
                       {HumanPlacement{human.ref,
                                       RandomBox(size, canvas_width, canvas_height, rng),
                                       human.scale, 0}}};
}

bool SatisfiesOcclusion(const PlacementSpec& spec, LowerRule rule) {
  if (spec.humans.size() != 2) return false;
  const HumanPlacement& first = spec.humans[0];
  const HumanPlacement& second = spec.humans[1];
  const HumanPlacement& occluder = first.z_order > second.z_order ? first : second;
  const HumanPlacement& occluded = first.z_order > second.z_order ? second : first;
  if (occluder.z_order == occluded.z_order) return false;
  for (const auto& h : spec.humans) {
    if (h.box.x < 0 || h.box.y < 0 || h.box.Right() > spec.canvas_width ||
        h.box.Bottom() > spec.canvas_height) {
      return false;
    }
  }
  return IntersectionArea(occluder.box, occluded.box) > 0 &&
         LowerKey(occluder.box, rule) > LowerKey(occluded.box, rule);
}

double MaskIoU(const PlacementSpec& spec, const BinaryMask& mask_a,
               const BinaryMask& mask_b) {
  if (spec.humans.size() != 2) {
    throw Error(ErrorCode::kInvalidArgument, "mask IoU needs two placed humans");
  }
  const std::optional<Box> ba = mask_a.BoundingBox();
  const std::optional<Box> bb = mask_b.BoundingBox();
  if (!ba || !bb) throw Error(ErrorCode::kInvalidArgument, "empty mask");
  long long inter = 0;
  long long uni = 0;
  for (int y = 0; y < spec.canvas_height; ++y) {
    for (int x = 0; x < spec.canvas_width; ++x) {
      const bool in_a = PlacedBit(spec.humans[0], mask_a, *ba, x, y);
      const bool in_b = PlacedBit(spec.humans[1], mask_b, *bb, x, y);
      inter += in_a && in_b;
      uni += in_a || in_b;
    }
  }
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace posediv
