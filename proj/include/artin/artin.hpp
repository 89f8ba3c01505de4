#ifndef ARTIN_ARTIN_HPP
#define ARTIN_ARTIN_HPP

#include <artin/coxeter.hpp>
#include <artin/error.hpp>
#include <artin/groupoid.hpp>
#include <artin/integer.hpp>
#include <artin/twist.hpp>
#include <artin/verify.hpp>
#include <artin/words.hpp>

#endif
