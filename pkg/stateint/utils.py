# Copyright 2026 StateInt
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Utils methods for stateint"""
import re
import yaml


class Dotdict(dict):
    """dot.notation access to dictionary attributes"""
    __getattr__ = dict.get
    __setattr__ = dict.__setitem__
    __delattr__ = dict.__delitem__


def parse_config(path):
    """Reads a yaml file and returns its top-level sections
    :param path: path to the yaml file
    :returns: Dotdict mapping section name to a Dotdict of values
    """
    with open(path, 'r') as ymlfile:
        conf = yaml.load(ymlfile, Loader=yaml.FullLoader)

    return Dotdict({name: Dotdict(values or {})
                    for name, values in conf.items()})


_NUMBER = r'\d+(?:\.\d*)?|\.\d+'
_COMPLEX = re.compile(
    r'^(?P<re>[+-]?(?:{n}))?(?:(?P<sign>[+-])?(?P<im>{n})?i)?$'.format(n=_NUMBER))


def parse_complex(text):
    """Parses a complex literal of the form a+bi / a-bi.
    Either part may be missing ("0.3i", "-2", "-i"), no spaces and
    no exponents are accepted.
    :param text: the literal
    :returns: complex
    """
    match = _COMPLEX.match(text.strip()) if text else None
    if not match or not text.strip() or text.strip() in ('+', '-'):
        raise ValueError("Invalid complex literal: {!r}".format(text))
    real = float(match.group('re')) if match.group('re') else 0.0
    imag = 0.0
    if text.strip().endswith('i'):
        imag = float(match.group('im')) if match.group('im') else 1.0
        if match.group('sign') == '-':
            imag = -imag
        elif match.group('sign') is None and match.group('re'):
            # "2i" parsed as re="2": the digits belong to the imaginary part
            imag, real = real, 0.0
    return complex(real, imag)


def fmt17(value):
    """Formats a float with 17 significant digits"""
    return '%.17g' % value


def format_complex(value):
    """Formats a complex number as a+bi with 17 significant digits"""
    imag = fmt17(abs(value.imag))
    sign = '-' if value.imag < 0 or (value.imag == 0 and
                                    str(value.imag).startswith('-')) else '+'
    return '{}{}{}i'.format(fmt17(value.real), sign, imag)
