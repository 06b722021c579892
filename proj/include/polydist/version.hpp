// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace polydist {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace polydist
