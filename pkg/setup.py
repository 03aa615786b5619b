from setuptools import setup

install_requires = [
    'lark>=1.1',
    'ujson',
    'pandas',
    'numpy',
    ]

tests_require = [
    'hypothesis',
    ]

setup(
    name='lpt',
    version='0.1',
    install_requires=install_requires,
    tests_require=tests_require,
    test_suite="execute_tests",
    packages=['lib', 'lib.lpt', 'lib.lpt.conf', 'lib.lpt.core', 'lib.lpt.core.dataformat', 'lib.lpt.engine',
              'lib.lpt.oracle', 'lib.lpt.signature', 'lib.lpt.rm', 'lib.lpt.cli', 'lib.lpt.utils',
              'test'],
    entry_points={
        'console_scripts': ['lpt = lib.lpt.cli.main:main'],
    },
    python_requires='>=3.7',
    license='',
    description='Live progress tracking of finite-trace LTL specifications'
)
