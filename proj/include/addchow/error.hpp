#ifndef ADDCHOW_ERROR_HPP
#define ADDCHOW_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace addchow {

enum class ErrorKind {
  DivisionByZero,
  TowerMismatch,
  NoExtension,
  UnknownVariable,
  UnsupportedDegree,
  CharacteristicObstruction,
  ZeroArgument,
  HigherOrderPole,
  BadPosition,
  IndexOutOfRange,
  ZeroProduct,
  DegenerateModulus,
  DegenerateData,
  NegativeLimitValuation,
  Singular,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::TowerMismatch: return "TowerMismatch";
    case ErrorKind::NoExtension: return "NoExtension";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::CharacteristicObstruction: return "CharacteristicObstruction";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::HigherOrderPole: return "HigherOrderPole";
    case ErrorKind::BadPosition: return "BadPosition";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ZeroProduct: return "ZeroProduct";
    case ErrorKind::DegenerateModulus: return "DegenerateModulus";
    case ErrorKind::DegenerateData: return "DegenerateData";
    case ErrorKind::NegativeLimitValuation: return "NegativeLimitValuation";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace addchow

#endif  // ADDCHOW_ERROR_HPP
