ARISTO_VERSION = (0, 3, 0)
ARISTO_VERSION_LABEL = ".".join(map(str, ARISTO_VERSION))
ARISTO_PACKAGE_VERSION_LABEL = ARISTO_VERSION_LABEL

if __name__ == '__main__':
    print(ARISTO_PACKAGE_VERSION_LABEL)
