// Copyright 2026 The chainlint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the chainlint analyzer.
 *
 * Handles are opaque. Every entry point that can fail returns a
 * chainlint_status; on CHAINLINT_USAGE_ERROR or CHAINLINT_ANALYSIS_ERROR the
 * message is available from chainlint_last_error() on the calling thread.
 * Strings returned by accessors are owned by the handle they came from.
 */

#ifndef CHAINLINT_CHAINLINT_H_
#define CHAINLINT_CHAINLINT_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define CHAINLINT_API __attribute__((visibility("default")))
#else
#define CHAINLINT_API
#endif

typedef enum chainlint_status {
  CHAINLINT_OK = 0,
  CHAINLINT_FINDINGS = 1,
  CHAINLINT_USAGE_ERROR = 2,
  CHAINLINT_ANALYSIS_ERROR = 3
} chainlint_status;

typedef struct chainlint_config chainlint_config;
typedef struct chainlint_result chainlint_result;

CHAINLINT_API const char* chainlint_version(void);
CHAINLINT_API const char* chainlint_last_error(void);

/* Analysis configuration rooted at `root`. Returns NULL on allocation
 * failure or a NULL root. */
CHAINLINT_API chainlint_config* chainlint_config_new(const char* root);
CHAINLINT_API void chainlint_config_free(chainlint_config* config);

/* Sets an option. List-valued names append on each call.
 *
 *   config include exclude mode entry_method server_suffix extra_entry
 *   blacklist enable disable time_deny unsafe_package bech32_setter
 *   output baseline fail_on threads
 */
CHAINLINT_API chainlint_status chainlint_config_set(chainlint_config* config, const char* name,
                                                    const char* value);

/* Each command stores a result in *out, also on error, and returns its exit
 * status. Release it with chainlint_result_free. */
CHAINLINT_API chainlint_status chainlint_analyze(const chainlint_config* config,
                                                 chainlint_result** out);
CHAINLINT_API chainlint_status chainlint_scope(const chainlint_config* config, int dump_graph,
                                               chainlint_result** out);
/* Empty or NULL path writes to the configured baseline. */
CHAINLINT_API chainlint_status chainlint_baseline_write(const chainlint_config* config,
                                                        const char* path,
                                                        chainlint_result** out);

/* group_by is "rule" or "project"; format is "text" or "json". Inputs are
 * findings files, optionally prefixed "NAME=". */
CHAINLINT_API chainlint_status chainlint_eval(const char* const* inputs, size_t input_count,
                                              const char* labels, const char* group_by,
                                              int allow_unlabeled, const char* format,
                                              chainlint_result** out);
CHAINLINT_API chainlint_status chainlint_compare(const char* first, const char* second,
                                                 int fp_only_gain, const char* format,
                                                 chainlint_result** out);

CHAINLINT_API void chainlint_result_free(chainlint_result* result);
CHAINLINT_API int chainlint_result_exit_code(const chainlint_result* result);
/* Text for stdout and stderr respectively. */
CHAINLINT_API const char* chainlint_result_output(const chainlint_result* result);
CHAINLINT_API const char* chainlint_result_diagnostics(const chainlint_result* result);

CHAINLINT_API size_t chainlint_result_finding_count(const chainlint_result* result);
/* Finding fields; NULL / 0 for an out-of-range index. */
CHAINLINT_API const char* chainlint_finding_rule(const chainlint_result* result, size_t index);
CHAINLINT_API const char* chainlint_finding_file(const chainlint_result* result, size_t index);
CHAINLINT_API unsigned chainlint_finding_line(const chainlint_result* result, size_t index);
CHAINLINT_API unsigned chainlint_finding_column(const chainlint_result* result, size_t index);
CHAINLINT_API const char* chainlint_finding_fingerprint(const chainlint_result* result,
                                                        size_t index);
CHAINLINT_API int chainlint_finding_suppressed(const chainlint_result* result, size_t index);

#ifdef __cplusplus
}
#endif

#endif /* CHAINLINT_CHAINLINT_H_ */
