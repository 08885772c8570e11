#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adathresh
{

/// Raised when a parameter or image violates a documented invariant.
class ValidationError : public std::invalid_argument
{
public:
	using std::invalid_argument::invalid_argument;
};

/// Raised for file system failures (unreadable input, unwritable output).
class IoError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

enum class ParseErrorKind
{
	BadMagic,
	BadHeaderToken,
	MaxvalTooLarge,
	SampleOutOfRange,
	Truncated,
};

const char* to_string(ParseErrorKind kind) noexcept;

/// Malformed PGM input. Carries the byte offset where decoding stopped.
class ParseError : public std::runtime_error
{
public:
	ParseError(ParseErrorKind kind, std::size_t offset, const std::string& detail);

	ParseErrorKind kind() const noexcept { return kind_; }
	std::size_t offset() const noexcept { return offset_; }

private:
	ParseErrorKind kind_;
	std::size_t offset_;
};

} // namespace adathresh
