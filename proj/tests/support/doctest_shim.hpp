/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

// Qualified stringification keeps doctest away from the project's own
// toString overloads, which return string_view rather than doctest::String.
#pragma once

#define DOCTEST_STRINGIFY(...) doctest::toString(__VA_ARGS__)
#include <doctest.h>
