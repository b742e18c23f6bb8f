/*
 * gmld - exact computation of Gaussian maximum-likelihood degrees, polar and
 * gradient multidegrees, rational-MLE classification of curves, and
 * verification of homaloidal-PDE solutions.
 *
 * The library works on "sessions": small text files declaring a polynomial
 * ring and named bindings (see README). All functions return a status code;
 * detailed results arrive as JSON (or plain text) in a heap string that the
 * caller releases with gmld_str_free.
 */
#ifndef GMLD_H
#define GMLD_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    GMLD_OK = 0,          /* success */
    GMLD_FALSE = 1,       /* computed mathematical verdict is "false" */
    GMLD_ERR_INPUT = 2,   /* malformed session, bad arguments, bad prime */
    GMLD_ERR_RESOURCE = 3 /* step budget exhausted */
} gmld_status;

typedef struct gmld_session gmld_session;

typedef struct gmld_options {
    int64_t prime;       /* coefficient prime for specialized counts (default 32003) */
    uint64_t seed;       /* base seed; echoed in every report */
    int has_seed;        /* 0: draw a seed from entropy and echo it */
    int trials;          /* agreement trials for randomized counts (default 3) */
    int64_t step_budget; /* reduction-step budget per command (default 10^7) */
    int text_format;     /* 0: JSON report, 1: plain text */
} gmld_options;

void gmld_options_init(gmld_options* opt);

/* Parse a session from text or from a file. On failure *err (if non-NULL)
 * receives a message; free it with gmld_str_free. */
gmld_status gmld_parse(const char* text, gmld_session** out, char** err);
gmld_status gmld_parse_file(const char* path, gmld_session** out, char** err);
void gmld_session_free(gmld_session* ses);

/* Run one subcommand (gb, mld, polar, grad-mdeg, dual, conormal, mult,
 * f-general, classify-curve, pde-check, assoc-variety, phi-from-alpha,
 * s2-family, perturb) against a session. */
gmld_status gmld_run(const gmld_session* ses, const char* command, const gmld_options* opt,
                     char** report, char** err);

/* Join of two one-factor sessions (each binding F and Phi). */
gmld_status gmld_join(const gmld_session* a, const gmld_session* b, const gmld_options* opt,
                      char** report, char** err);

/* Reproduce the whole worked-example suite from a session directory; the
 * report lists one expected-vs-computed row per example. */
gmld_status gmld_examples_suite(const char* sessions_dir, const gmld_options* opt, char** report,
                                char** err);

void gmld_str_free(char* s);
const char* gmld_version(void);

#ifdef __cplusplus
}
#endif

#endif /* GMLD_H */
