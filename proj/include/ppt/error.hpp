#pragma once

#include <stdexcept>
#include <string>

namespace ppt {

enum class ErrorCode {
  InconsistentRotation,
  OuterFaceNotFound,
  DegenerateGraph,
  EmptySubset,
  DisconnectedSubset,
  NotIndependent,
  NotLaman,
  NotLamanPlusOne,
  PrescriptionInvalid,
  StepInconsistent,
  OuterFaceTooSmall,
  BadEdgeCount,
  PrescribedVertexOnOuterFace,
  NoPerfectMatching,
  NotSimplyConnected,
  TooLarge,
  NoValidExtension,
  RepeatedBoundaryVertex,
  NotThreeConnected,
  SolverFailure,
  LabelMismatch,
  AnchorNotOnFace,
  NoPlacement,
  SequenceNotInteriorOnly,
  IsolatedVertex,
  FacesMismatch,
  ParseError,
  BadSize,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ppt
