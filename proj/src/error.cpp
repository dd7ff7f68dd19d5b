#include "ppt/error.hpp"

namespace ppt {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InconsistentRotation: return "InconsistentRotation";
    case ErrorCode::OuterFaceNotFound: return "OuterFaceNotFound";
    case ErrorCode::DegenerateGraph: return "DegenerateGraph";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::DisconnectedSubset: return "DisconnectedSubset";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::NotLaman: return "NotLaman";
    case ErrorCode::NotLamanPlusOne: return "NotLamanPlusOne";
    case ErrorCode::PrescriptionInvalid: return "PrescriptionInvalid";
    case ErrorCode::StepInconsistent: return "StepInconsistent";
    case ErrorCode::OuterFaceTooSmall: return "OuterFaceTooSmall";
    case ErrorCode::BadEdgeCount: return "BadEdgeCount";
    case ErrorCode::PrescribedVertexOnOuterFace: return "PrescribedVertexOnOuterFace";
    case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::NotSimplyConnected: return "NotSimplyConnected";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoValidExtension: return "NoValidExtension";
    case ErrorCode::RepeatedBoundaryVertex: return "RepeatedBoundaryVertex";
    case ErrorCode::NotThreeConnected: return "NotThreeConnected";
    case ErrorCode::SolverFailure: return "SolverFailure";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::AnchorNotOnFace: return "AnchorNotOnFace";
    case ErrorCode::NoPlacement: return "NoPlacement";
    case ErrorCode::SequenceNotInteriorOnly: return "SequenceNotInteriorOnly";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::FacesMismatch: return "FacesMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadSize: return "BadSize";
  }
  return "UnknownError";
}

}  // namespace ppt
