/**
 * @file test_main.cpp
 * @brief doctest entry point shared by the unit tests.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
