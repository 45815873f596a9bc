// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QHA_ERRORS_HPP
#define QHA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qha {

enum class Errc {
  ParseError,
  DuplicateArrowName,
  UnknownVertex,
  DirectedCycle,
  Disconnected,
  FieldMismatch,
  BadScalar,
  NotDynkin,
  NotExtendedDynkin,
  DegenerateRank,
  LadderBroken,
  WrongQuiverShape,
  NonSincereWeight,
  IrregularWeight,
  NonHomogeneous,
  ResourceBound,
  LambdaForbidden,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Error(Errc code, const std::string& what, long detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(detail) {}

  Errc code() const { return code_; }
  // extra payload, e.g. the step index of a broken ladder
  long detail() const { return detail_; }

private:
  Errc code_;
  long detail_ = 0;
};

}  // namespace qha

#endif
