# Copyright 2026 The Pole Approx Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Exception types for pole_approx errors."""

# The error code values are aligned with absl status errors.
INVALID_ARGUMENT = 3
RESOURCE_EXHAUSTED = 8
FAILED_PRECONDITION = 9
OUT_OF_RANGE = 11
INTERNAL = 13


class StatusError(Exception):
  """A general error class that maps a status code to typed errors."""

  def __init__(self, message, error_code):
    """Creates a `StatusError`."""
    super(StatusError, self).__init__(message)
    self.message = message
    self.error_code = error_code


class InvalidArgumentError(StatusError):
  """Raised when an operation receives an invalid argument."""

  def __init__(self, message):
    """Creates an `InvalidArgumentError`."""
    super(InvalidArgumentError, self).__init__(message, INVALID_ARGUMENT)


class ResourceExhaustedError(StatusError):
  """Raised when an iteration budget is spent before convergence.

  Attributes:
    last_reference: the reference points (in t) of the final exchange step,
      or an empty tuple when the caller has none to report.
  """

  def __init__(self, message, last_reference=()):
    """Creates a `ResourceExhaustedError`."""
    super(ResourceExhaustedError, self).__init__(message, RESOURCE_EXHAUSTED)
    self.last_reference = tuple(last_reference)


class FailedPreconditionError(StatusError):
  """Raised when the working precision cannot support the computation."""

  def __init__(self, message):
    """Creates a `FailedPreconditionError`."""
    super(FailedPreconditionError, self).__init__(message, FAILED_PRECONDITION)


class OutOfRangeError(StatusError):
  """Raised when a formula is evaluated outside its domain."""

  def __init__(self, message):
    """Creates an `OutOfRangeError`."""
    super(OutOfRangeError, self).__init__(message, OUT_OF_RANGE)


class InternalError(StatusError):
  """Raised when a numerical invariant breaks inside a solve."""

  def __init__(self, message):
    """Creates an `InternalError`."""
    super(InternalError, self).__init__(message, INTERNAL)
