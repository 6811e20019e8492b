#pragma once

#include <gtest/gtest.h>

#include <functional>

#include "hamloc/error.hpp"

/// The ErrorCode thrown by f; records a test failure if nothing is thrown.
inline hamloc::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const hamloc::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return hamloc::ErrorCode::InternalInvariant;
}
