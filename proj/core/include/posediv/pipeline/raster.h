// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "posediv/pipeline/mask.h"
#include "posediv/pose/pose.h"

namespace posediv {

// Stick-figure silhouette of a 2D pose over a mono-color background: the
// pose is fitted into the canvas with `margin` pixels to spare and every
// bone is drawn as a capsule of `radius` pixels. Used by the mock translator
// to stand in for generated images.
Raster RenderSilhouette(const Pose2D& pose, int width, int height, Rgb background,
                        Rgb foreground, int radius = 3, int margin = 8);

}  // namespace posediv
