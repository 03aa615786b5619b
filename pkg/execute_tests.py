#!/usr/bin/env python

from test.test_syntax import TestParse, TestFormat, TestFormula, TestSpecFile
from test.test_trace import TestReadTrace, TestTrace, TestSuffix
from test.test_engine import TestFormulaTree, TestStep, TestFinalize, TestEvaluationCount, TestEngineProperties
from test.test_oracle import TestHolds, TestContinuations, TestStatus
from test.test_checks import TestRunInstance, TestSuites
from test.test_signature import TestSignature
from test.test_rm import TestRMState, TestPolicies, TestGridWorld
from test.test_cli import (TestParseCommand, TestTrackCommand, TestOracleCheckCommand, TestDemoKeysCommand,
                           TestRmSimCommand, TestBenchCommand, TestFrontDoor)
from test.test_configuration import TestConfiguration, TestBoundedCache, TestParallel
from test.test_acceptance import TestTerminalAndLockIn, TestSoundness, TestComplexityBound
import unittest

if __name__ == '__main__':
    unittest.main()
