// Copyright 2026 The fklens Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace fklens {

// Index or parameter outside the domain of a function. Selection-rule zeros
// are returned as values, never reported through this type.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested size exceeds what double precision evaluates reliably.
class PrecisionError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// A built or loaded kernel failed its unitarity check.
class UnitarityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Image or kernel dimensions disagree with the grid they are used with.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or unsupported image file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CacheVersionError : public CacheError {
 public:
  using CacheError::CacheError;
};

class CacheChecksumError : public CacheError {
 public:
  using CacheError::CacheError;
};

class CacheHeaderError : public CacheError {
 public:
  using CacheError::CacheError;
};

}  // namespace fklens
