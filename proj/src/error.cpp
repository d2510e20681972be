#include "ssg/error.hpp"

namespace ssg {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotSubsemigroup: return "NotSubsemigroup";
    case ErrorKind::ZNotCentralInN: return "ZNotCentralInN";
    case ErrorKind::BinormalityFails: return "BinormalityFails";
    case ErrorKind::TrinormalityFails: return "TrinormalityFails";
    case ErrorKind::NotStructured: return "NotStructured";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::NotCoset: return "NotCoset";
    case ErrorKind::NotAtlas: return "NotAtlas";
    case ErrorKind::NotInUpClosure: return "NotInUpClosure";
    case ErrorKind::InvalidGroupoid: return "InvalidGroupoid";
    case ErrorKind::InvalidCocycle: return "InvalidCocycle";
    case ErrorKind::NotRepresentation: return "NotRepresentation";
    case ErrorKind::NoZero: return "NoZero";
    case ErrorKind::NotSemilattice: return "NotSemilattice";
    case ErrorKind::NotInverse: return "NotInverse";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::TooManySections: return "TooManySections";
    case ErrorKind::TooManyRelations: return "TooManyRelations";
    case ErrorKind::TooManyOpens: return "TooManyOpens";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace ssg
