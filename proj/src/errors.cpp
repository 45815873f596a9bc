// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0

#include "qha/errors.hpp"

namespace qha {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::DuplicateArrowName: return "DuplicateArrowName";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::DirectedCycle: return "DirectedCycle";
    case Errc::Disconnected: return "Disconnected";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::BadScalar: return "BadScalar";
    case Errc::NotDynkin: return "NotDynkin";
    case Errc::NotExtendedDynkin: return "NotExtendedDynkin";
    case Errc::DegenerateRank: return "DegenerateRank";
    case Errc::LadderBroken: return "LadderBroken";
    case Errc::WrongQuiverShape: return "WrongQuiverShape";
    case Errc::NonSincereWeight: return "NonSincereWeight";
    case Errc::IrregularWeight: return "IrregularWeight";
    case Errc::NonHomogeneous: return "NonHomogeneous";
    case Errc::ResourceBound: return "ResourceBound";
    case Errc::LambdaForbidden: return "LambdaForbidden";
  }
  return "Error";
}

}  // namespace qha
