// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "posediv/diffusion/sampler.h"
#include "posediv/pipeline/mask.h"
#include "posediv/pipeline/records.h"

namespace posediv {

// Scale that makes the longer side of the mask's tight bounding box equal the
// longer side of a uniformly drawn size-table entry. Throws
// Error(kInvalidArgument) for an empty mask or table.
double ResizeFactor(const BinaryMask& mask, std::span<const SizeEntry> size_table,
                    Rng& rng);

// A generated human ready to be placed: its cleaned mask and resize factor.
struct ScaledHuman {
  std::string ref;
  BinaryMask mask;
  double scale = 1.0;

  // Bounding box size after scaling (each side rounded, at least 1 pixel).
  SizeEntry ScaledSize() const;
};

struct HumanPlacement {
  std::string ref;
  Box box;
  double scale = 1.0;
  int z_order = 0;  // larger is drawn in front
  friend bool operator==(const HumanPlacement&, const HumanPlacement&) = default;
};

struct PlacementSpec {
  std::string background_ref;
  int canvas_width = 0;
  int canvas_height = 0;
  std::vector<HumanPlacement> humans;
  friend bool operator==(const PlacementSpec&, const PlacementSpec&) = default;
};

// Which edge decides "lower in the image".
enum class LowerRule { kBottomEdge, kCenterY };

struct PlacementOptions {
  int max_tries = 100;
  LowerRule lower_rule = LowerRule::kBottomEdge;
};

// Rejection-samples positions for two humans until their boxes overlap with
// positive area and one sits strictly lower in the image; that one becomes
// the occluder (front z-order, listed second). Throws Error(kPlacement)
// after max_tries, or when either scaled box does not fit the canvas.
PlacementSpec PlaceWithOcclusion(const ScaledHuman& a, const ScaledHuman& b,
                                 int canvas_width, int canvas_height, Rng& rng,
                                 const PlacementOptions& options = {},
                                 const std::string& background_ref = {});

// Single human, uniformly placed inside the canvas.
PlacementSpec PlaceSingle(const ScaledHuman& human, int canvas_width,
                          int canvas_height, Rng& rng,
                          const std::string& background_ref = {});

// True iff the spec has two humans whose boxes overlap and whose occluder
// (the higher z-order) is strictly lower under `rule`.
bool SatisfiesOcclusion(const PlacementSpec& spec,
                        LowerRule rule = LowerRule::kBottomEdge);

// Diagnostic: IoU of the two placed masks (nearest-neighbour scaled) on the
// canvas. Masks are given in the order of spec.humans.
double MaskIoU(const PlacementSpec& spec, const BinaryMask& mask_a,
               const BinaryMask& mask_b);

}  // namespace posediv
