# v0.1.0
from setuptools import setup, find_packages

with open("README.md", encoding="utf-8") as fh:
    long_description = fh.read()

with open('requirements.txt') as reqs_file:
    requirements = [r for r in reqs_file.read().splitlines()
                    if r and r != 'pytest']

setup(
    name="stateint",
    version="0.1.0",
    description="Evaluates quantum dilogarithm state-integrals by quadrature and in closed form",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="Apache License",
    python_requires=">=3.8",
    install_requires=requirements,
    extras_require={'test': ['pytest']},
    packages=find_packages('.', exclude=('tests',)),
    package_dir={"stateint": "stateint"},
    package_data={"stateint": ["defaults.yml"]},
    entry_points={"console_scripts": ["stateint=stateint.cli:run"]},
)

# python3 setup.py sdist bdist_wheel
