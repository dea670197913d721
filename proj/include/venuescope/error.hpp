#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace venuescope {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or unwritable file/stream.
class IoError : public Error {
 public:
  using Error::Error;
};

// Invalid schema, pipeline config, or flag value. `field()` names the offender.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Malformed input row. Line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

// Ontology references that point at topics which do not exist.
class LoadError : public Error {
 public:
  LoadError(const std::string& message, std::vector<std::string> offenders)
      : Error(message), offenders_(std::move(offenders)) {}
  const std::vector<std::string>& offenders() const noexcept { return offenders_; }

 private:
  std::vector<std::string> offenders_;
};

// A pipeline stage was asked to run before its upstream artifacts exist.
class DependencyError : public Error {
 public:
  DependencyError(std::string missing, const std::string& message)
      : Error(message + ": " + missing), missing_(std::move(missing)) {}
  const std::string& missing() const noexcept { return missing_; }

 private:
  std::string missing_;
};

// Report generation stopped part-way; `completed()` lists the files already written.
class ReportError : public Error {
 public:
  ReportError(const std::string& message, std::vector<std::string> completed)
      : Error(message), completed_(std::move(completed)) {}
  const std::vector<std::string>& completed() const noexcept { return completed_; }

 private:
  std::vector<std::string> completed_;
};

}  // namespace venuescope
