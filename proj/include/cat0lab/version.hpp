//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAT0LAB_VERSION_HPP_
#define CAT0LAB_VERSION_HPP_

namespace cat0lab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cat0lab

#endif  // CAT0LAB_VERSION_HPP_
