/*
Copyright 2026 The dagmetrics Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dagmetrics {

/// Base class of every error raised by the library. The message is a
/// single line suitable for printing as a CLI diagnostic.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input errors: the text or the graph it describes is not acceptable.
class InputError : public Error {
  public:
    using Error::Error;
};

class MalformedLine : public InputError {
  public:
    MalformedLine(std::size_t line, const std::string &reason)
        : InputError("line " + std::to_string(line) + ": " + reason), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

class CycleDetected : public InputError {
  public:
    /// `cycle` lists the labels of one directed cycle in edge order, without
    /// repeating the first vertex at the end.
    explicit CycleDetected(std::vector<std::string> cycle);

    const std::vector<std::string> &cycle() const noexcept { return cycle_; }

  private:
    std::vector<std::string> cycle_;
};

class SelfLoop : public InputError {
  public:
    explicit SelfLoop(std::string label)
        : InputError("self-loop on vertex " + label), label_(std::move(label)) {}

    const std::string &label() const noexcept { return label_; }

  private:
    std::string label_;
};

class DuplicateEdge : public InputError {
  public:
    DuplicateEdge(std::string from, std::string to)
        : InputError("duplicate edge " + from + " -> " + to), from_(std::move(from)), to_(std::move(to)) {}

    const std::string &from() const noexcept { return from_; }
    const std::string &to() const noexcept { return to_; }

  private:
    std::string from_;
    std::string to_;
};

class EmptyGraph : public InputError {
  public:
    EmptyGraph() : InputError("empty graph: at least one vertex is required") {}
};

/// Raised by the exhaustive oracles when the graph exceeds the configured vertex bound.
class TooLarge : public Error {
  public:
    TooLarge(std::size_t vertices, std::size_t bound)
        : Error("graph has " + std::to_string(vertices) + " vertices, oracle bound is " + std::to_string(bound)),
          vertices_(vertices), bound_(bound) {}

    std::size_t vertices() const noexcept { return vertices_; }
    std::size_t bound() const noexcept { return bound_; }

  private:
    std::size_t vertices_;
    std::size_t bound_;
};

} // namespace dagmetrics
